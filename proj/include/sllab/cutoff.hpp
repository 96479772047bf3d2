#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "sllab/piecewise_poly.hpp"

namespace sllab {

// C^3 cutoff: identically 1 on (0, b1], identically 0 on [b2, R0), built as
// 1 + the triple antiderivative of a smoothed piecewise-linear third
// derivative supported in [b1, b2].  The three tent amplitudes are solved
// from the moment conditions that make the cutoff and its first two
// derivatives vanish at b2.
class SmoothCutoff {
 public:
  double t = 0.0, b1 = 0.0, b2 = 0.0, R0 = 1.0;
  double C0 = 0.0;          // certified sup_k sup_r |chi^(k)(r)| b2^k, k = 1..3
  double a1 = 0, a2 = 0, a3 = 0;  // solved tent amplitudes
  PiecewisePoly chi, chi1, chi2, chi3, chi4;

  double eval(double r, int k = 0) const {
    switch (k) {
      case 0:
        if (r <= b1) return 1.0;
        if (r >= b2) return 0.0;
        return chi.eval(r);
      case 1: return (r <= b1 || r >= b2) ? 0.0 : chi1.eval(r);
      case 2: return (r <= b1 || r >= b2) ? 0.0 : chi2.eval(r);
      case 3: return (r <= b1 || r >= b2) ? 0.0 : chi3.eval(r);
      case 4: return (r <= b1 || r >= b2) ? 0.0 : chi4.eval(r);
      default: throw std::invalid_argument("SmoothCutoff: derivative order out of range");
    }
  }
};

// strict = true enforces the smallness hypothesis b1 < b2/8 under which the
// derivative bounds are claimed with a layout-independent constant; with
// strict = false the same construction is carried out for any b1 < (15/16) b2
// (the knot layout compresses into [b1, b2] and the certified constant may
// grow), which the large-t end of some sweeps needs.
inline SmoothCutoff buildCutoff(double t, double b1, double b2, double R0, bool strict = true) {
  if (!(0.0 < b1 && b1 < b2 && b2 < R0))
    throw std::invalid_argument("buildCutoff: need 0 < b1 < b2 < R0");
  if (strict && !(b1 < b2 / 8.0))
    throw std::invalid_argument("buildCutoff: smallness hypothesis b1 < b2/8 violated");

  double w = b2 / 64.0;  // mollifier half-width
  if (!(b1 + 2.0 * w < b2 - 2.0 * w))
    throw std::invalid_argument("buildCutoff: no room for the transition layout");

  // Tent knots: zeros at relative positions (0, 1/4, 3/4, 1) and peaks at
  // (1/8, 1/2, 7/8) of [b1 + w, b2 - w]; after smoothing by half-width w the
  // support of the third derivative is exactly [b1, b2].
  double z0 = b1 + w, z6 = b2 - w, span = z6 - z0;
  auto at = [&](double f) { return z0 + f * span; };
  std::vector<double> knots = {at(0.0), at(0.125), at(0.25), at(0.5), at(0.75), at(0.875), at(1.0)};

  // Unit tents (disjoint supports) smoothed individually to get the exact
  // moment matrix of the smoothed basis.
  Eigen::Matrix3d M;
  std::vector<PiecewisePoly> tentsSm;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> kn = {knots[2 * i], knots[2 * i + 1], knots[2 * i + 2]};
    PiecewisePoly tent = piecewiseLinear(kn, {0.0, 1.0, 0.0});
    PiecewisePoly sm = mollify(tent, w);
    tentsSm.push_back(sm);
    for (int k = 0; k < 3; ++k) M(k, i) = sm.moment(k);
  }
  // chi''(b2) = M0 = 0, chi'(b2) = b2 M0 - M1 = 0, chi(b2) = 1 + (..M2..)/2 = 0.
  Eigen::Vector3d rhs(0.0, 0.0, -2.0);
  Eigen::Vector3d amp = M.fullPivLu().solve(rhs);

  PiecewisePoly hat = piecewiseLinear(
      knots, {0.0, amp[0], 0.0, amp[1], 0.0, amp[2], 0.0});
  PiecewisePoly hatSm = mollify(hat, w);

  // Extend by zero to [0, R0] so the antiderivative chain carries the
  // constant tails explicitly.
  {
    std::vector<double> nb = {0.0};
    std::vector<std::vector<double>> nc = {{0.0}};
    for (std::size_t i = 0; i + 1 < hatSm.breaks.size(); ++i) {
      nb.push_back(hatSm.breaks[i]);
      nc.push_back(hatSm.coef[i]);
    }
    nb.push_back(hatSm.breaks.back());
    nc.push_back({0.0});
    nb.push_back(R0);
    hatSm = PiecewisePoly(nb, nc);
  }

  SmoothCutoff c;
  c.t = t;
  c.b1 = b1;
  c.b2 = b2;
  c.R0 = R0;
  c.a1 = amp[0];
  c.a2 = amp[1];
  c.a3 = amp[2];
  c.chi3 = hatSm;
  c.chi4 = hatSm.derivative();
  c.chi2 = c.chi3.antiderivative(0.0);
  c.chi1 = c.chi2.antiderivative(0.0);
  c.chi = c.chi1.antiderivative(1.0);

  // Certify the derivative bounds by dense sampling.
  int nSamples = 10000;
  double sup = 0.0;
  for (int i = 0; i <= nSamples; ++i) {
    double r = b1 + (b2 - b1) * double(i) / nSamples;
    for (int k = 1; k <= 3; ++k)
      sup = std::max(sup, std::abs(c.eval(r, k)) * std::pow(b2, k));
  }
  c.C0 = sup;
  return c;
}

}  // namespace sllab
