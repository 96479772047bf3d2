#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "sllab/connection.hpp"
#include "sllab/cutoff.hpp"
#include "sllab/geometry.hpp"
#include "sllab/params.hpp"
#include "sllab/powerfit.hpp"
#include "sllab/quadrature.hpp"
#include "sllab/regions.hpp"

namespace sllab {

// Sweeps of the closed-form bound integrands over the inner tube P and the
// transition annulus Q, log-log exponent fits against the predicted tables,
// the radial-partition norms, and the scaling report for the deformation
// criteria.

struct NormCurve {
  std::string quantity;
  std::string regionLabel;      // "(7)", "(12)_1", "P", ... where applicable
  int m = 2;
  double c1 = 0.0, c2 = 0.0;
  std::vector<double> ts, values;
  PowerFit fit;
  bool logCorrected = false;
  bool hasPrediction = false;
  DominantExponent predicted;
};

// ---------------------------------------------------------------------------
// Model bound fields (the explicit integrand bounds; all radial)
// ---------------------------------------------------------------------------

// Inner tube P, parametrized by the fiber radius r2 in [0, r2Max].
struct PModelField {
  double t;
  const ModelParams& prm;

  double r2Max() const {
    int m = prm.m;
    return std::pow(prm.a, 1.0 / m) * std::pow(t, (double(m) - 1.0 + prm.c1) / m);
  }
  double eps(double r2) const {
    return std::pow(t, 1.0 - prm.m) * std::pow(r2, double(prm.m)) + r2;
  }
  double deps(double r2) const {
    return std::pow(t, 1.0 - prm.m) * std::pow(r2, double(prm.m) - 1.0) + 1.0;
  }
  double density(double r2) const {
    int m = prm.m;
    double s = double(m * m) / (prm.a * prm.a) * std::pow(t, 2.0 * (1.0 - m)) *
               std::pow(r2, 2.0 * (m - 1));
    return 2.0 * std::numbers::pi * prm.l * r2 * (1.0 + s);
  }
};

// Transition annulus Q, parametrized by the base radius r1 in [b1, b2].
struct QModelField {
  double t;
  const ModelParams& prm;

  double r1Min() const { return prm.b1(t); }
  double r1Max() const { return prm.b2(t); }
  double eps(double r1) const {
    int m = prm.m;
    return std::pow(t, 1.0 - 1.0 / m) *
           (std::pow(t, -2.0 * prm.c2) + std::pow(r1, 1.0 / m - 1.0));
  }
  double deps(double r1) const {
    int m = prm.m;
    return std::pow(t, 1.0 - 1.0 / m) *
           (std::pow(t, -3.0 * prm.c2) + std::pow(r1, 1.0 / m - 2.0));
  }
  double density(double r1) const {
    int m = prm.m;
    double grad = eps(r1);
    double rad = std::sqrt(r1 * r1 + std::pow(t, 2.0 * (1.0 - 1.0 / m - prm.c2)));
    return 2.0 * std::numbers::pi * m * prm.l * std::sqrt(1.0 + grad * grad) * rad;
  }
};

// ---------------------------------------------------------------------------
// Norms of the model fields
// ---------------------------------------------------------------------------

enum class FieldKind { Eps, DEps };

inline double integrateNormP(FieldKind kind, double p, double t, const ModelParams& prm) {
  PModelField f{t, prm};
  double hi = f.r2Max();
  auto integrand = [&](double r2) {
    double v = (kind == FieldKind::Eps) ? f.eps(r2) : f.deps(r2);
    return std::pow(std::abs(v), p) * f.density(r2);
  };
  QuadResult q = integrateGraded(integrand, 0.0, hi, prm.quadTol);
  return std::pow(q.value, 1.0 / p);
}

inline double integrateNormQ(FieldKind kind, double p, double t, const ModelParams& prm) {
  QModelField f{t, prm};
  auto integrand = [&](double r1) {
    double v = (kind == FieldKind::Eps) ? f.eps(r1) : f.deps(r1);
    return std::pow(std::abs(v), p) * f.density(r1);
  };
  QuadResult q = integrateGraded(integrand, f.r1Min(), f.r1Max(), prm.quadTol);
  return std::pow(q.value, 1.0 / p);
}

// Sup of the model field over a log mesh, refined twice around the maximum.
inline double supNormModel(FieldKind kind, RegionLabel region, double t, const ModelParams& prm,
                           int nMesh = 400) {
  double lo, hi;
  if (region == RegionLabel::P) {
    PModelField f{t, prm};
    lo = 1e-8 * f.r2Max();
    hi = f.r2Max();
  } else {
    QModelField f{t, prm};
    lo = f.r1Min();
    hi = f.r1Max();
  }
  auto val = [&](double r) {
    if (region == RegionLabel::P) {
      PModelField f{t, prm};
      return (kind == FieldKind::Eps) ? f.eps(r) : f.deps(r);
    }
    QModelField f{t, prm};
    return (kind == FieldKind::Eps) ? f.eps(r) : f.deps(r);
  };
  double bestR = lo, best = 0.0;
  double la = std::log(lo), lb = std::log(hi);
  for (int pass = 0; pass < 3; ++pass) {
    double localBest = -1.0, localR = bestR;
    for (int i = 0; i <= nMesh; ++i) {
      double r = std::exp(la + (lb - la) * double(i) / nMesh);
      double v = std::abs(val(r));
      if (v > localBest) {
        localBest = v;
        localR = r;
      }
    }
    best = localBest;
    bestR = localR;
    double h = (lb - la) / nMesh;
    la = std::max(std::log(lo), std::log(bestR) - 2.0 * h);
    lb = std::min(std::log(hi), std::log(bestR) + 2.0 * h);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Curves and verification
// ---------------------------------------------------------------------------

namespace detail {

inline double quantityValue(const std::string& quantity, double t, const ModelParams& prm) {
  if (quantity == "epsL65_P") return integrateNormP(FieldKind::Eps, 1.2, t, prm);
  if (quantity == "epsL1_P") return integrateNormP(FieldKind::Eps, 1.0, t, prm);
  if (quantity == "depsL6_P") return integrateNormP(FieldKind::DEps, 6.0, t, prm);
  if (quantity == "epsC0_P") return supNormModel(FieldKind::Eps, RegionLabel::P, t, prm);
  if (quantity == "epsL65_Q") return integrateNormQ(FieldKind::Eps, 1.2, t, prm);
  if (quantity == "epsL1_Q") return integrateNormQ(FieldKind::Eps, 1.0, t, prm);
  if (quantity == "depsL6_Q") return integrateNormQ(FieldKind::DEps, 6.0, t, prm);
  if (quantity == "epsC0_Q") return supNormModel(FieldKind::Eps, RegionLabel::Q, t, prm);
  throw std::invalid_argument("quantityValue: unknown quantity " + quantity);
}

// Fit over the smallest-t half of the samples.
inline PowerFit fitTail(const std::vector<double>& ts, const std::vector<double>& vals,
                        bool logCorrection) {
  std::size_t n = ts.size(), from = n / 2;
  std::vector<double> t2(ts.begin() + long(from), ts.end());
  std::vector<double> v2(vals.begin() + long(from), vals.end());
  return fitPowerLaw(t2, v2, logCorrection);
}

}  // namespace detail

inline NormCurve normCurve(const std::string& quantity, const ModelParams& prm) {
  if (prm.tGrid.size() < 6) throw std::invalid_argument("normCurve: tGrid too small");
  NormCurve c;
  c.quantity = quantity;
  c.m = prm.m;
  c.c1 = prm.c1;
  c.c2 = prm.c2;
  Frac fc1 = fracFromDouble(prm.c1), fc2 = fracFromDouble(prm.c2);
  c.hasPrediction = true;
  c.predicted = predictedExponent(quantity, prm.m, fc1, fc2);
  if (quantity.size() >= 2 && quantity.substr(quantity.size() - 2) == "_Q")
    c.regionLabel = regionName(quantity == "depsL6_Q" ? classifyRegion26(fc1, fc2, prm.m)
                                                      : classifyRegion13(fc1, fc2, prm.m));
  else
    c.regionLabel = "P";
  c.logCorrected = c.predicted.logPower != Frac(0);
  for (double t : prm.tGrid) {
    c.ts.push_back(t);
    c.values.push_back(detail::quantityValue(quantity, t, prm));
  }
  c.fit = detail::fitTail(c.ts, c.values, c.logCorrected);
  return c;
}

struct VerifyRecord {
  std::string quantity;
  std::string regionLabel;
  double fitted = 0.0;
  double predicted = 0.0;
  BoundKind kind = BoundKind::UpperBound;
  double maxRatio = 0.0;        // max over grid of value / t^predicted (log-adjusted)
  double ratioGrowth = 0.0;     // maxRatio(last half) / maxRatio(first half)
  bool pass = false;
};

inline VerifyRecord verifyCurve(const NormCurve& c, double fitTol) {
  VerifyRecord r;
  r.quantity = c.quantity;
  r.regionLabel = c.regionLabel;
  r.fitted = c.fit.exponent;
  r.predicted = c.predicted.exponent.value();
  r.kind = c.predicted.kind;
  double firstHalfMax = 0.0, lastHalfMax = 0.0;
  for (std::size_t i = 0; i < c.ts.size(); ++i) {
    double lg = std::pow(-std::log(c.ts[i]), c.predicted.logPower.value());
    double ratio = c.values[i] / (std::pow(c.ts[i], r.predicted) * lg);
    r.maxRatio = std::max(r.maxRatio, ratio);
    (i < c.ts.size() / 2 ? firstHalfMax : lastHalfMax) = std::max(
        i < c.ts.size() / 2 ? firstHalfMax : lastHalfMax, ratio);
  }
  r.ratioGrowth = lastHalfMax / std::max(firstHalfMax, 1e-300);
  if (r.kind == BoundKind::EqualityOrder)
    r.pass = std::abs(r.fitted - r.predicted) <= fitTol;
  else
    r.pass = (r.fitted >= r.predicted - fitTol) && (r.ratioGrowth <= 1.5) &&
             std::isfinite(r.maxRatio);
  return r;
}

inline VerifyRecord verifyQuantity(const std::string& quantity, const ModelParams& prm) {
  return verifyCurve(normCurve(quantity, prm), prm.fitTol);
}

// Sup-norm-to-bound ratios for the running-max stability check: the sup of
// the model field divided by the closed-form bound expression, per t.
struct SupRatioCurve {
  std::vector<double> ts, ratioP, ratioQ;
  double runningMaxVariationP = 0.0;  // over the last half of the grid
  double runningMaxVariationQ = 0.0;
  bool pass = false;
};

inline SupRatioCurve supRatioCurve(const ModelParams& prm, double tolerance = 0.20) {
  SupRatioCurve out;
  int m = prm.m;
  double q = 1.0 - 1.0 / m;
  for (double t : prm.tGrid) {
    double boundP = std::pow(t, prm.c1) + std::pow(t, q + prm.c1 / m);
    double boundQ = std::pow(t, q - 2.0 * prm.c2) + std::pow(t, q * (1.0 - prm.c1));
    out.ts.push_back(t);
    out.ratioP.push_back(supNormModel(FieldKind::Eps, RegionLabel::P, t, prm) / boundP);
    out.ratioQ.push_back(supNormModel(FieldKind::Eps, RegionLabel::Q, t, prm) / boundQ);
  }
  auto variation = [](const std::vector<double>& v) {
    std::size_t n = v.size(), from = n / 2;
    double runMax = 0.0;
    for (std::size_t i = 0; i <= from; ++i) runMax = std::max(runMax, v[i]);
    double atHalf = runMax;
    for (std::size_t i = from + 1; i < n; ++i) runMax = std::max(runMax, v[i]);
    return runMax / std::max(atHalf, 1e-300) - 1.0;
  };
  out.runningMaxVariationP = variation(out.ratioP);
  out.runningMaxVariationQ = variation(out.ratioQ);
  out.pass = out.runningMaxVariationP <= tolerance && out.runningMaxVariationQ <= tolerance;
  return out;
}

// ---------------------------------------------------------------------------
// Radial two-component partition {F^t, 1 - F^t}
// ---------------------------------------------------------------------------

// Degree-7 polynomial smoothstep: 1 on (0, a], 0 on [b, inf), C^3 at the
// joins (first three derivatives vanish at both ends).
inline double smoothstep7(double s, double a, double b, int deriv = 0) {
  if (s <= a) return deriv == 0 ? 1.0 : 0.0;
  if (s >= b) return 0.0;
  double u = (s - a) / (b - a);
  // p(u) = 1 - (35u^4 - 84u^5 + 70u^6 - 20u^7)
  switch (deriv) {
    case 0: return 1.0 - u * u * u * u * (35.0 - 84.0 * u + 70.0 * u * u - 20.0 * u * u * u);
    case 1:
      return -u * u * u * (140.0 - 420.0 * u + 420.0 * u * u - 140.0 * u * u * u) / (b - a);
    default: throw std::invalid_argument("smoothstep7: derivative order unsupported");
  }
}

struct PartitionCurves {
  NormCurve dF;         // L^3 norm of the differential of the partition profile
  NormCurve oneMinusF;  // L^{6/5} norm of the complementary bump
  double predictedDF = 0.0;         // -partB / 3 (up to log factors)
  double predictedOneMinusF = 0.0;  // 5 partA / (3 m)
};

inline PartitionCurves sobolevPartitionCurves(const ModelParams& prm) {
  if (!(0.0 < prm.partA && prm.partA < prm.partB && prm.partB < 1.0))
    throw std::invalid_argument("sobolevPartitionCurves: need 0 < partA < partB < 1");
  PartitionCurves out;
  int m = prm.m;
  double a = prm.partA, b = prm.partB;
  double pref3 = 2.0 * std::numbers::pi * m * prm.l;
  for (double t : prm.tGrid) {
    double L = -std::log(t);
    // ||dF||_{L^3}^3 = 2 pi m l |log t|^{-2} Int_a^b |G'(s)|^3 t^{-s} ds
    auto g3 = [&](double s) {
      double gd = smoothstep7(s, a, b, 1);
      return std::abs(gd * gd * gd) * std::exp(s * L);
    };
    QuadResult q3 = integrate(g3, a, b, prm.quadTol);
    double v3 = std::cbrt(pref3 * q3.value / (L * L));
    out.dF.ts.push_back(t);
    out.dF.values.push_back(v3);
    // ||1-F||_{L^{6/5}} on the rescaled model tube, density as displayed
    double amp = prm.a;
    auto g65 = [&](double r) {
      double oneMinusG = 1.0 - smoothstep7(std::log(r) / std::log(t), a, b);
      double dens = r * (1.0 + std::pow(amp, 2.0 / m) * std::pow(r, 2.0 * (1.0 - m) / m) /
                                   double(m * m));
      return std::pow(oneMinusG, 1.2) * dens;
    };
    QuadResult q65 = integrateGraded(g65, 0.0, std::pow(t, a), prm.quadTol);
    out.oneMinusF.ts.push_back(t);
    out.oneMinusF.values.push_back(std::pow(pref3 * q65.value, 5.0 / 6.0));
  }
  out.dF.quantity = "dF_L3";
  out.oneMinusF.quantity = "oneMinusF_L65";
  out.dF.m = out.oneMinusF.m = m;
  out.dF.logCorrected = true;
  out.dF.fit = detail::fitTail(out.dF.ts, out.dF.values, true);
  out.oneMinusF.fit = detail::fitTail(out.oneMinusF.ts, out.oneMinusF.values, false);
  out.predictedDF = -b / 3.0;
  out.predictedOneMinusF = 5.0 * a / (3.0 * m);
  return out;
}

// ---------------------------------------------------------------------------
// Scaling report for the deformation criteria
// ---------------------------------------------------------------------------

struct CriteriaReport {
  std::vector<double> ts;
  std::array<std::vector<double>, 4> betaScaled;  // sup||nabla^k beta|| * t^k
  std::vector<double> curvScaled;                 // sup||R|| * t^2
  std::vector<double> proxyOverT;                 // conjugate-radius proxy / t
  std::vector<double> slopeMinOverT;              // min fiber slope / t
  double decaySlopeFitted = 0.0;
  double decaySlopePredicted = 0.0;
  std::array<double, 4> betaVariation{};          // running-max variation, last half
  double curvVariation = 0.0;
  double proxyMin = 0.0;
  bool betaPass = false, curvPass = false, proxyPass = false, decayPass = false;
};

namespace detail {

inline double runningMaxVariation(const std::vector<double>& v) {
  std::size_t n = v.size(), from = n / 2;
  double runMax = 0.0;
  for (std::size_t i = 0; i <= from && i < n; ++i) runMax = std::max(runMax, v[i]);
  double atHalf = runMax;
  for (std::size_t i = from + 1; i < n; ++i) runMax = std::max(runMax, v[i]);
  return runMax / std::max(atHalf, 1e-300) - 1.0;
}

}  // namespace detail

inline CriteriaReport criteriaReport(const ModelParams& prm, double tolerance = 0.20) {
  CriteriaReport rep;
  for (double t : prm.tGrid) {
    rep.ts.push_back(t);
    std::array<double, 4> beta = betaNormSup(t, prm);
    for (int k = 0; k < 4; ++k) rep.betaScaled[k].push_back(beta[k] * std::pow(t, k));

    SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0, false);
    double supR = 0.0;
    double rLo = t * prm.R0prime, rHi = prm.R0 * 0.999;
    int nMesh = 240;
    for (int i = 0; i <= nMesh; ++i) {
      double r = std::exp(std::log(rLo) +
                          (std::log(rHi) - std::log(rLo)) * double(i) / nMesh);
      supR = std::max(supR, curvature(r, t, prm, cut).riemannNorm);
    }
    rep.curvScaled.push_back(supR * t * t);
    rep.proxyOverT.push_back(conjugateRadiusProxy(t, prm, cut) / t);
    rep.slopeMinOverT.push_back(fiberRadiusCheck(t, prm, cut).minSlopeOverT);
  }

  // Decay-rate fit of the connection coefficient on the exact model leaf at
  // the smallest t (the amplitude there is deep in the decay regime).
  {
    double t = prm.tGrid.back();
    double amp = prm.a * std::pow(t, double(prm.m - 1));
    std::vector<double> rs, cs;
    for (int i = 0; i <= 40; ++i) {
      double r = std::exp(std::log(0.05) + (std::log(1.0) - std::log(0.05)) * i / 40.0);
      rs.push_back(r);
      cs.push_back(connectionDecayCoefficient(r, prm.m, amp));
    }
    rep.decaySlopeFitted = fitPowerLaw(rs, cs).exponent;
    rep.decaySlopePredicted = (2.0 - 3.0 * prm.m) / double(prm.m);
  }

  for (int k = 0; k < 4; ++k)
    rep.betaVariation[k] = detail::runningMaxVariation(rep.betaScaled[k]);
  rep.curvVariation = detail::runningMaxVariation(rep.curvScaled);
  rep.proxyMin = *std::min_element(rep.proxyOverT.begin(), rep.proxyOverT.end());

  rep.betaPass = true;
  for (int k = 0; k < 4; ++k) rep.betaPass = rep.betaPass && rep.betaVariation[k] <= tolerance;
  rep.curvPass = rep.curvVariation <= tolerance;
  rep.proxyPass = rep.proxyMin > 0.0 && std::isfinite(rep.proxyMin);
  rep.decayPass = std::abs(rep.decaySlopeFitted - rep.decaySlopePredicted) <= 0.1;
  return rep;
}

}  // namespace sllab
