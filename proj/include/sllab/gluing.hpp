#pragma once

#include <cmath>
#include <stdexcept>

#include "sllab/cutoff.hpp"
#include "sllab/flat_model.hpp"
#include "sllab/params.hpp"

namespace sllab {

enum class RegionLabel { P, Q, K };

inline const char* regionName(RegionLabel r) {
  switch (r) {
    case RegionLabel::P: return "P";
    case RegionLabel::Q: return "Q";
    default: return "K";
  }
}

// Classification of a domain point by its downstairs radius r = |x1+ix2|^m
// against b1 = t^c1 and b2 = t^c2; boundary ties go to the smaller region.
inline RegionLabel regionOfRadius(double r, double t, const ModelParams& prm) {
  if (r <= prm.b1(t)) return RegionLabel::P;
  if (r <= prm.b2(t)) return RegionLabel::Q;
  return RegionLabel::K;
}

inline RegionLabel regionOf(const DomainPoint& x, double t, const ModelParams& prm) {
  return regionOfRadius(x.r(prm.m), t, prm);
}

// The glued radial profile, returned SIGNED: the deformed image has
// zh2 = r2 e^{i theta2}, and where the cutoff derivative dominates r2 can
// dip below zero; callers take |r2| where a geometric radius is required.
inline double gluedProfile(double r1, double t, const ModelParams& prm,
                           const SmoothCutoff& cutoff) {
  if (!(r1 >= 0.0)) throw std::invalid_argument("gluedProfile: negative radius");
  double amp = std::pow(prm.a, 1.0 / prm.m) * std::pow(t, double(prm.m - 1) / prm.m);
  double chi = cutoff.eval(r1, 0), chid = cutoff.eval(r1, 1);
  return amp * ((double(prm.m) / (prm.m + 1)) * chid + chi * std::pow(r1, 1.0 / prm.m));
}

// d r2 / d r1 of the profile (exact, via the cutoff's stored derivatives).
inline double gluedProfileDeriv(double r1, double t, const ModelParams& prm,
                                const SmoothCutoff& cutoff) {
  double amp = std::pow(prm.a, 1.0 / prm.m) * std::pow(t, double(prm.m - 1) / prm.m);
  double chi = cutoff.eval(r1, 0), chid = cutoff.eval(r1, 1), chidd = cutoff.eval(r1, 2);
  double p = 1.0 / prm.m;
  double rp = std::pow(r1, p);
  return amp * ((double(prm.m) / (prm.m + 1)) * chidd + chid * rp +
                (r1 > 0.0 ? chi * p * rp / r1 : 0.0));
}

// Radial-profile form of the glued immersion: on the transition annulus the
// image point is (r1 e^{i theta1}, x3, r2 e^{i theta2}, 0) with
// m theta2 = theta1, theta2 = arg(x1 + i x2).  This is the form every
// displayed metric/volume estimate uses.
inline AmbientPoint gluedImmersion(const DomainPoint& x, double t, const ModelParams& prm,
                                   const SmoothCutoff& cutoff) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("gluedImmersion: t must be in (0,1)");
  Complex zeta = x.zeta();
  Complex zh1 = std::pow(zeta, prm.m);
  double r1 = std::abs(zh1);
  double r2 = gluedProfile(r1, t, prm, cutoff);
  double rho = std::abs(zeta);
  Complex e1 = rho > 0.0 ? zeta / rho : Complex(1.0, 0.0);
  return AmbientPoint::fromViews(zh1, x.x3, r2 * e1, 0.0, prm.l);
}

// Exact graph of d(chi(r1) * t^{(m-1)/m} h) pushed through the covering
// chart map.  Lagrangian by construction; coincides with gluedImmersion
// wherever the cutoff derivative vanishes (inner tube and exterior) and
// differs on the transition annulus by an angular modulation of the
// cutoff-derivative term.
inline AmbientPoint graphImmersion(const DomainPoint& x, double t, const ModelParams& prm,
                                   const SmoothCutoff& cutoff) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("graphImmersion: t must be in (0,1)");
  Complex zeta = x.zeta();
  Complex zh1 = std::pow(zeta, prm.m);
  double rho = std::abs(zeta);
  double r1 = std::abs(zh1);
  double amp = std::pow(prm.a, 1.0 / prm.m) * std::pow(t, double(prm.m - 1) / prm.m);
  double chi = cutoff.eval(r1, 0), chid = cutoff.eval(r1, 1);
  double phi = std::arg(zeta);
  Complex zh2 =
      amp * ((double(prm.m) / (prm.m + 1)) * chid * r1 * rho * std::cos((prm.m + 1) * phi) *
                 std::exp(Complex(0.0, -double(prm.m) * phi)) +
             chi * zeta);
  return AmbientPoint::fromViews(zh1, x.x3, zh2, 0.0, prm.l);
}

}  // namespace sllab
