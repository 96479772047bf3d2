#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace sllab {

// All scalar parameters of the construction, plus the t-schedule and the
// numerical tolerances.  Two parametrizations of the matching radii are
// carried: b1 = t^c1, b2 = t^c2 for the norm sweeps, and
// b_i = Cb_i * t^(1-eta_i) for the fiber-radius / partition analysis.
struct ModelParams {
  int m = 2;              // branching degree >= 2
  double a = 1.0;         // deformation amplitude > 0
  double l = 1.0;         // circumference of the circle factor
  double R0 = 1.0;        // outer chart radius
  double R0prime = 1.0;   // inner core radius multiplier (core = t*R0prime)
  double c1 = 0.5;        // b1 = t^c1
  double c2 = 0.3;        // b2 = t^c2, 0 < c2 < c1
  double eta1 = 0.15;     // b1 = Cb1 * t^(1-eta1)
  double eta2 = 0.3;      // b2 = Cb2 * t^(1-eta2), eta1 < eta2
  double Cb1 = 1.0;
  double Cb2 = 1.0;
  double partA = 0.4;     // inner exponent of the radial partition profile
  double partB = 0.6;     // outer exponent, 0 < partA < partB < 1 - eta2
  std::vector<double> tGrid;  // strictly decreasing, in (0,1)
  double quadTol = 1e-9;      // relative quadrature tolerance
  double fitTol = 0.15;       // exponent-fit tolerance
  int thetaSamples = 64;      // periodic-rule resolution in the angle

  double b1(double t) const { return std::pow(t, c1); }
  double b2(double t) const { return std::pow(t, c2); }
  double b1eta(double t) const { return Cb1 * std::pow(t, 1.0 - eta1); }
  double b2eta(double t) const { return Cb2 * std::pow(t, 1.0 - eta2); }

  static std::vector<double> dyadicGrid(int kMin, int kMax) {
    std::vector<double> g;
    for (int k = kMin; k <= kMax; ++k) g.push_back(std::ldexp(1.0, -k));
    return g;
  }

  static ModelParams defaults() {
    ModelParams p;
    p.tGrid = dyadicGrid(4, 16);
    return p;
  }
};

struct ParamCheck {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

inline ParamCheck validate(const ModelParams& p) {
  ParamCheck r;
  auto err = [&](const std::string& s) { r.errors.push_back(s); };
  auto warn = [&](const std::string& s) { r.warnings.push_back(s); };

  if (p.m < 2) err("m must be >= 2");
  if (!(p.a > 0.0)) err("a must be positive");
  if (!(p.l > 0.0)) err("l must be positive");
  if (!(p.R0 > 0.0)) err("R0 must be positive");
  if (!(p.c2 > 0.0 && p.c2 < p.c1)) err("need 0 < c2 < c1 (keys c1, c2)");
  if (!(p.eta1 > 0.0 && p.eta1 < p.eta2 && p.eta2 < 1.0))
    err("need 0 < eta1 < eta2 < 1 (keys eta1, eta2)");
  if (p.tGrid.size() < 2) err("tGrid needs at least two points");
  for (std::size_t i = 0; i < p.tGrid.size(); ++i) {
    double t = p.tGrid[i];
    if (!(t > 0.0 && t < 1.0)) { err("tGrid values must lie in (0,1)"); break; }
    if (i > 0 && !(t < p.tGrid[i - 1])) { err("tGrid must be strictly decreasing"); break; }
  }
  if (!(p.partA > 0.0 && p.partA < p.partB && p.partB < 1.0 - p.eta2))
    err("need 0 < partA < partB < 1 - eta2");

  if (r.errors.empty()) {
    for (double t : p.tGrid) {
      if (!(p.b2(t) < p.R0)) { err("tGrid: b2 = t^c2 must stay below R0"); break; }
      if (!(p.b1(t) < p.b2(t))) { err("tGrid: b1 = t^c1 must stay below b2 = t^c2"); break; }
      if (!(t * p.R0prime < p.b1(t))) {
        // The core-inside-tube requirement t*R0prime < t^c1 cannot hold as
        // t -> 0 once c1 > 1; the sweeps with c1 > 1 only ever evaluate
        // closed-form inner-tube integrands, so this is a warning there.
        if (p.c1 > 1.0)
          warn("tGrid: core radius t*R0prime is not below b1 = t^c1 (c1 > 1 regime)");
        else
          err("tGrid: core radius t*R0prime must stay below b1 = t^c1");
        break;
      }
    }
    double thr = 0.5 * (1.0 + 1.0 / p.m);
    double thr2 = (1.0 - p.partA) / p.m;
    if (!(p.eta2 > std::max(thr, thr2)))
      warn("eta2 does not exceed max{(1+1/m)/2, (1-partA)/m}; the partition remainder bounds need not decay");
  }
  return r;
}

}  // namespace sllab
