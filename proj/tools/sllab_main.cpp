#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sllab/suites.hpp"

// Command-line driver: runs one named suite (or all of them) and emits, per
// suite, a curves CSV, a machine-readable summary, and a human table into the
// output directory.  The exit status is the number of failed non-exploratory
// checks (capped), so scripts can gate on it.

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the branched special Lagrangian gluing model"};

  std::string configPath, suite, outDir;
  long long seed = -1;
  int tMinExp = -1, tMaxExp = -1;
  double quadTol = -1.0, fitTol = -1.0;

  app.add_option("suite", suite,
                 "suite to run: flat-identities, gluing, phase-norms, criteria, "
                 "sobolev-partition, spectral, sobolev-probe, all");
  app.add_option("--config", configPath, "key=value configuration file");
  app.add_option("--out", outDir, "output directory (default: $SLLAB_OUT_DIR or ./out)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--t-min-exp", tMinExp, "largest t is 2^-k with this k");
  app.add_option("--t-max-exp", tMaxExp, "smallest t is 2^-k with this k");
  app.add_option("--quad-tol", quadTol, "relative quadrature tolerance");
  app.add_option("--fit-tol", fitTol, "exponent-fit tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    sllab::ExperimentConfig cfg;
    if (!configPath.empty()) {
      cfg = sllab::loadConfig(configPath);
    } else {
      if (const char* env = std::getenv("SLLAB_OUT_DIR")) cfg.outDir = env;
    }
    if (!suite.empty()) cfg.suite = suite;
    if (!outDir.empty()) cfg.outDir = outDir;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (tMinExp >= 0) cfg.tMinExp = tMinExp;
    if (tMaxExp >= 0) cfg.tMaxExp = tMaxExp;
    if (quadTol > 0.0) cfg.prm.quadTol = quadTol;
    if (fitTol > 0.0) cfg.prm.fitTol = fitTol;
    cfg.prm.tGrid = sllab::ModelParams::dyadicGrid(cfg.tMinExp, cfg.tMaxExp);

    sllab::ParamCheck chk = sllab::validate(cfg.prm);
    if (!chk.ok()) {
      std::cerr << "invalid parameters:\n";
      for (const auto& e : chk.errors) std::cerr << "  " << e << "\n";
      return 64;
    }
    for (const auto& w : chk.warnings) std::cerr << "warning: " << w << "\n";

    int failures = 0;
    for (const sllab::VerificationReport& rep : sllab::runSuites(cfg)) {
      sllab::emitReports(rep, cfg.outDir);
      failures += rep.failures();
      for (const auto& c : rep.checks) {
        const char* flag = c.exploratory ? "explore" : (c.pass ? "pass   " : "FAIL   ");
        std::cout << flag << "  " << rep.suite << "  " << c.id << "  measured="
                  << sllab::formatDouble(c.measured) << "\n";
      }
      std::cout << rep.suite << ": " << rep.failures() << " failure(s)\n";
    }
    return failures > 100 ? 100 : failures;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 65;
  }
}
