#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sllab/asymptotics.hpp"

namespace sllab {

// Verification-report assembly and deterministic emission.  Every check
// carries a stable claim id (or the tag "exploratory"); numbers are printed
// with a fixed locale-free format so identical runs give identical bytes.

struct CheckRecord {
  std::string id;           // stable claim id, e.g. "flat.rotation-identity"
  std::string claim;        // one-line statement of what is being checked
  double predicted = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool exploratory = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::vector<NormCurve> curves;

  int failures() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass && !c.exploratory) ++n;
    return n;
  }
};

inline std::string formatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string jsonEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline void writeCurvesCsv(const VerificationReport& rep, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "quantity,region,m,c1,c2,t,value\n";
  for (const auto& c : rep.curves)
    for (std::size_t i = 0; i < c.ts.size(); ++i)
      out << c.quantity << ',' << c.regionLabel << ',' << c.m << ',' << formatDouble(c.c1) << ','
          << formatDouble(c.c2) << ',' << formatDouble(c.ts[i]) << ','
          << formatDouble(c.values[i]) << '\n';
}

inline void writeSummaryJson(const VerificationReport& rep, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "{\n  \"suite\": \"" << jsonEscape(rep.suite) << "\",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    out << "    {\"claim\": \"" << jsonEscape(c.claim) << "\", \"exploratory\": "
        << (c.exploratory ? "true" : "false") << ", \"id\": \"" << jsonEscape(c.id)
        << "\", \"measured\": " << formatDouble(c.measured)
        << ", \"pass\": " << (c.pass ? "true" : "false")
        << ", \"predicted\": " << formatDouble(c.predicted)
        << ", \"tolerance\": " << formatDouble(c.tolerance) << "}"
        << (i + 1 < rep.checks.size() ? "," : "") << "\n";
  }
  out << "  ],\n  \"curves\": [\n";
  for (std::size_t i = 0; i < rep.curves.size(); ++i) {
    const auto& c = rep.curves[i];
    out << "    {\"c1\": " << formatDouble(c.c1) << ", \"c2\": " << formatDouble(c.c2)
        << ", \"fittedExponent\": " << formatDouble(c.fit.exponent)
        << ", \"logCorrected\": " << (c.logCorrected ? "true" : "false")
        << ", \"m\": " << c.m << ", \"predictedExponent\": "
        << (c.hasPrediction ? formatDouble(c.predicted.exponent.value()) : "null")
        << ", \"quantity\": \"" << jsonEscape(c.quantity) << "\", \"rSquared\": "
        << formatDouble(c.fit.rSquared) << ", \"region\": \"" << jsonEscape(c.regionLabel)
        << "\", \"samples\": " << c.ts.size() << "}" << (i + 1 < rep.curves.size() ? "," : "")
        << "\n";
  }
  out << "  ],\n  \"failures\": " << rep.failures() << "\n}\n";
}

inline void writeHumanTable(const VerificationReport& rep, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "suite: " << rep.suite << "\n\n";
  out << "  result      id                                   measured        predicted\n";
  out << "  ----------  -----------------------------------  --------------  --------------\n";
  for (const auto& c : rep.checks) {
    std::string flag = c.exploratory ? "explore" : (c.pass ? "pass" : "FAIL");
    char line[200];
    std::snprintf(line, sizeof line, "  %-10s  %-35s  %-14s  %-14s\n", flag.c_str(),
                  c.id.c_str(), formatDouble(c.measured).c_str(),
                  formatDouble(c.predicted).c_str());
    out << line;
  }
  out << "\nfailures: " << rep.failures() << "\n";
}

inline void emitReports(const VerificationReport& rep, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  writeCurvesCsv(rep, dir / (rep.suite + "_curves.csv"));
  writeSummaryJson(rep, dir / (rep.suite + "_summary.json"));
  writeHumanTable(rep, dir / (rep.suite + "_table.txt"));
}

}  // namespace sllab
