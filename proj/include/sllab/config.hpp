#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sllab/params.hpp"

namespace sllab {

// Flat key=value configuration with dotted keys ("model.m = 3").  Lines
// starting with '#' and blank lines are ignored.

struct ExperimentConfig {
  std::string suite = "all";
  ModelParams prm = ModelParams::defaults();
  std::string outDir = "out";
  std::uint64_t seed = 1;
  int meshNr = 16, meshNphi = 16, meshNtheta = 8;
  int tMinExp = 4, tMaxExp = 16;
};

inline std::map<std::string, std::string> parseKeyValues(std::istream& in,
                                                         const std::string& sourceName) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineNo = 0;
  std::vector<std::string> errors;
  while (std::getline(in, line)) {
    ++lineNo;
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      errors.push_back(sourceName + ":" + std::to_string(lineNo) + ": expected key=value");
      continue;
    }
    std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (key.empty())
      errors.push_back(sourceName + ":" + std::to_string(lineNo) + ": empty key");
    else
      kv[key] = val;
  }
  if (!errors.empty()) {
    std::string msg = "config parse errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
  return kv;
}

inline void applyConfig(const std::map<std::string, std::string>& kv, ExperimentConfig& cfg) {
  std::vector<std::string> errors;
  auto getD = [&](const std::string& key, double& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    try {
      std::size_t pos = 0;
      slot = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      errors.push_back(key + ": not a number: '" + it->second + "'");
    }
  };
  auto getI = [&](const std::string& key, auto& slot) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    try {
      slot = static_cast<std::decay_t<decltype(slot)>>(std::stoll(it->second));
    } catch (const std::exception&) {
      errors.push_back(key + ": not an integer: '" + it->second + "'");
    }
  };
  auto getS = [&](const std::string& key, std::string& slot) {
    auto it = kv.find(key);
    if (it != kv.end()) slot = it->second;
  };

  getS("suite", cfg.suite);
  getS("out.dir", cfg.outDir);
  getI("seed", cfg.seed);
  getI("model.m", cfg.prm.m);
  getD("model.a", cfg.prm.a);
  getD("model.l", cfg.prm.l);
  getD("model.R0", cfg.prm.R0);
  getD("model.R0prime", cfg.prm.R0prime);
  getD("model.c1", cfg.prm.c1);
  getD("model.c2", cfg.prm.c2);
  getD("model.eta1", cfg.prm.eta1);
  getD("model.eta2", cfg.prm.eta2);
  getD("model.Cb1", cfg.prm.Cb1);
  getD("model.Cb2", cfg.prm.Cb2);
  getD("partition.a", cfg.prm.partA);
  getD("partition.b", cfg.prm.partB);
  getD("quad.tol", cfg.prm.quadTol);
  getD("fit.tol", cfg.prm.fitTol);
  getI("theta.samples", cfg.prm.thetaSamples);
  getI("t.minExp", cfg.tMinExp);
  getI("t.maxExp", cfg.tMaxExp);
  getI("mesh.nr", cfg.meshNr);
  getI("mesh.nphi", cfg.meshNphi);
  getI("mesh.ntheta", cfg.meshNtheta);

  static const char* known[] = {
      "suite",      "out.dir",    "seed",        "model.m",       "model.a",
      "model.l",    "model.R0",   "model.R0prime", "model.c1",    "model.c2",
      "model.eta1", "model.eta2", "model.Cb1",   "model.Cb2",     "partition.a",
      "partition.b", "quad.tol",  "fit.tol",     "theta.samples", "t.minExp",
      "t.maxExp",   "mesh.nr",    "mesh.nphi",   "mesh.ntheta"};
  for (const auto& [key, val] : kv) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) errors.push_back("unknown key: " + key);
  }

  cfg.prm.tGrid = ModelParams::dyadicGrid(cfg.tMinExp, cfg.tMaxExp);
  ParamCheck chk = validate(cfg.prm);
  for (const auto& e : chk.errors) errors.push_back(e);
  if (!errors.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw std::runtime_error(msg);
  }
}

inline ExperimentConfig loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config file not found: " + path);
  ExperimentConfig cfg;
  applyConfig(parseKeyValues(in, path), cfg);
  return cfg;
}

}  // namespace sllab
