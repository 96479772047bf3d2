#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sllab/gluing.hpp"
#include "sllab/jet.hpp"

namespace sllab {

using Jet1 = Jet<1>;
using Jet2 = Jet<2>;

// Complex number with jet components, for chart computations.
template <int N>
struct CJet {
  Jet<N> re, im;
  friend CJet operator+(const CJet& a, const CJet& b) { return {a.re + b.re, a.im + b.im}; }
  friend CJet operator-(const CJet& a, const CJet& b) { return {a.re - b.re, a.im - b.im}; }
  friend CJet operator*(const CJet& a, const CJet& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CJet operator*(const Jet<N>& s, const CJet& a) { return {s * a.re, s * a.im}; }
};

// Jet (order 3) of the signed glued profile w(r1) at r1 > 0.
inline Jet1 profileJet(double r1, double t, const ModelParams& prm, const SmoothCutoff& cutoff) {
  Jet1 r = Jet1::variable(r1, 0);
  Jet1 chi = Jet1::compose(
      {cutoff.eval(r1, 0), cutoff.eval(r1, 1), cutoff.eval(r1, 2), cutoff.eval(r1, 3)}, r);
  Jet1 chid = Jet1::compose(
      {cutoff.eval(r1, 1), cutoff.eval(r1, 2), cutoff.eval(r1, 3), cutoff.eval(r1, 4)}, r);
  double amp = std::pow(prm.a, 1.0 / prm.m) * std::pow(t, double(prm.m - 1) / prm.m);
  return amp * ((double(prm.m) / (prm.m + 1)) * chid + chi * pow(r, 1.0 / prm.m));
}

struct MetricSample {
  double r1 = 0.0;
  std::array<std::array<double, 3>, 3> g{};
  double sqrtDetG = 0.0;
  std::array<std::array<std::array<double, 3>, 3>, 3> christoffel{};
  double riemannNorm = 0.0;
  double sectional = 0.0;  // curvature of the (r1, theta1) block
  double u3ComponentResidual = 0.0;
};

// Pullback metric of the profile immersion in the (r1, theta1, u3) chart:
//   g = diag(1 + w'(r1)^2, r1^2 + w(r1)^2 / m^2, 1).
// Jets of the diagonal entries in r1 drive Christoffels and curvature.
inline std::array<Jet1, 3> metricDiagonalJets(double r1, double t, const ModelParams& prm,
                                              const SmoothCutoff& cutoff) {
  Jet1 r = Jet1::variable(r1, 0);
  Jet1 w = profileJet(r1, t, prm, cutoff);
  Jet1 wd = w.partial(0);  // w' as an order-2 jet
  Jet1 g11 = 1.0 + wd * wd;
  Jet1 g22 = r * r + (1.0 / double(prm.m * prm.m)) * (w * w);
  return {g11, g22, Jet1(1.0)};
}

inline MetricSample inducedMetric(double r1, double t, const ModelParams& prm,
                                  const SmoothCutoff& cutoff) {
  if (!(r1 > 0.0)) throw std::invalid_argument("inducedMetric: need r1 > 0");
  auto d = metricDiagonalJets(r1, t, prm, cutoff);
  MetricSample s;
  s.r1 = r1;
  for (int i = 0; i < 3; ++i) s.g[i][i] = d[i].v;
  double det = d[0].v * d[1].v * d[2].v;
  if (!(det > 0.0)) throw std::runtime_error("inducedMetric: degenerate metric");
  s.sqrtDetG = std::sqrt(det);

  // Christoffels of a diagonal metric depending on r1 (= coordinate 0) only.
  double gi[3] = {1.0 / d[0].v, 1.0 / d[1].v, 1.0 / d[2].v};
  double dg[3] = {d[0].g[0], d[1].g[0], d[2].g[0]};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        // 0.5 * g^{ii} (d_j g_{ik} + d_k g_{ij} - d_i g_{jk}); only d_0 nonzero.
        if (j == 0 && i == k) v += 0.5 * gi[i] * dg[i];
        if (k == 0 && i == j) v += 0.5 * gi[i] * dg[i];
        if (i == 0 && j == k) v -= 0.5 * gi[0] * dg[j];
        s.christoffel[i][j][k] = v;
      }
  return s;
}

// Full Riemann tensor of the diagonal r1-dependent metric, assembled from
// Christoffel jets; fills riemannNorm (g-norm of R_{ijkl}), the sectional
// curvature of the (r1,theta1) block, and the largest curvature component
// carrying a u3 index (which must vanish for the product metric).
inline MetricSample curvature(double r1, double t, const ModelParams& prm,
                              const SmoothCutoff& cutoff) {
  MetricSample s = inducedMetric(r1, t, prm, cutoff);
  auto d = metricDiagonalJets(r1, t, prm, cutoff);

  // Christoffels as jets (value + first r1-derivative is enough).
  Jet1 gj[3] = {d[0], d[1], d[2]};
  Jet1 gamma[3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Jet1 v(0.0);
        if (j == 0 && i == k) v += 0.5 * (gj[i].partial(0) / gj[i]);
        if (k == 0 && i == j) v += 0.5 * (gj[i].partial(0) / gj[i]);
        if (i == 0 && j == k) v -= 0.5 * (gj[j].partial(0) / gj[0]);
        gamma[i][j][k] = v;
      }

  // R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj} + Gamma^i_{km} Gamma^m_{lj}
  //                                                - Gamma^i_{lm} Gamma^m_{kj}.
  double R[3][3][3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double v = 0.0;
          if (k == 0) v += gamma[i][l][j].g[0];
          if (l == 0) v -= gamma[i][k][j].g[0];
          for (int m = 0; m < 3; ++m)
            v += gamma[i][k][m].v * gamma[m][l][j].v - gamma[i][l][m].v * gamma[m][k][j].v;
          R[i][j][k][l] = v;
        }

  double gv[3] = {d[0].v, d[1].v, d[2].v};
  double norm2 = 0.0, u3res = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double low = gv[i] * R[i][j][k][l];  // lower the first index
          norm2 += low * low / (gv[i] * gv[j] * gv[k] * gv[l]);
          if (i == 2 || j == 2 || k == 2 || l == 2) u3res = std::max(u3res, std::abs(low));
        }
  s.riemannNorm = std::sqrt(norm2);
  s.sectional = gv[0] * R[0][1][0][1] / (gv[0] * gv[1]);
  s.u3ComponentResidual = u3res;
  return s;
}

// Independent oracle for the closed-form metric: the Gram matrix of a
// fourth-order finite-difference Jacobian of the profile immersion in the
// (r1, theta1, u3) chart.
inline std::array<std::array<double, 3>, 3> gramFromImmersionFD(double r1, double theta1,
                                                                double t, const ModelParams& prm,
                                                                const SmoothCutoff& cutoff) {
  auto chart = [&](double r, double th) {
    double w = gluedProfile(r, t, prm, cutoff);
    double th2 = th / prm.m;
    return std::array<double, 4>{r * std::cos(th), r * std::sin(th), w * std::cos(th2),
                                 -w * std::sin(th2)};
  };
  double hr = 1e-4 * std::max(r1, cutoff.b2), hth = 1e-4;
  std::array<std::array<double, 4>, 2> jac{};
  for (int c = 0; c < 4; ++c) {
    auto fr = [&](double s) { return chart(r1 + s, theta1)[c]; };
    auto fth = [&](double s) { return chart(r1, theta1 + s)[c]; };
    auto d5 = [](auto f, double h) {
      return (-f(2 * h) + 8 * f(h) - 8 * f(-h) + f(-2 * h)) / (12.0 * h);
    };
    jac[0][c] = d5(fr, hr);
    jac[1][c] = d5(fth, hth);
  }
  std::array<std::array<double, 3>, 3> g{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double s = 0.0;
      for (int c = 0; c < 4; ++c) s += jac[a][c] * jac[b][c];
      g[a][b] = s;
    }
  g[2][2] = 1.0;
  return g;
}

struct PhaseSample {
  double r1 = 0.0, phi = 0.0;
  double eps = 0.0;
  double gradEpsNorm = 0.0;
};

// Phase of the exact glued graph (the Lagrangian representative) in the
// domain polar chart (rho, phi, x3): eps = Im Omega'(frame) / sqrt(det Gram),
// and |d eps| measured with the pullback-metric inverse.  Computed with
// order-3 jets in (rho, phi); the frame is the jet partial of the chart map.
inline PhaseSample phase(double rho, double phi, double t, const ModelParams& prm,
                         const SmoothCutoff& cutoff) {
  if (!(rho > 0.0)) throw std::invalid_argument("phase: need rho > 0");
  int m = prm.m;
  Jet2 rhoJ = Jet2::variable(rho, 0);
  Jet2 phiJ = Jet2::variable(phi, 1);
  Jet2 r1J = pow(rhoJ, double(m));
  double r1 = r1J.v;

  Jet2 chi = Jet2::compose(
      {cutoff.eval(r1, 0), cutoff.eval(r1, 1), cutoff.eval(r1, 2), cutoff.eval(r1, 3)}, r1J);
  Jet2 chid = Jet2::compose(
      {cutoff.eval(r1, 1), cutoff.eval(r1, 2), cutoff.eval(r1, 3), cutoff.eval(r1, 4)}, r1J);
  double amp = std::pow(prm.a, 1.0 / m) * std::pow(t, double(m - 1) / m);

  CJet<2> zeta{rhoJ * cos(phiJ), rhoJ * sin(phiJ)};
  CJet<2> zh1{pow(rhoJ, double(m)) * cos(double(m) * phiJ),
              pow(rhoJ, double(m)) * sin(double(m) * phiJ)};
  // zh2 = amp [ (m/(m+1)) chi' r1 rho cos((m+1)phi) e^{-im phi} + chi zeta ]
  Jet2 modAmp = (double(m) / (m + 1)) * chid * r1J * rhoJ * cos(double(m + 1) * phiJ);
  CJet<2> emiphi{cos(double(m) * phiJ), -sin(double(m) * phiJ)};
  CJet<2> zh2 = modAmp * emiphi + chi * zeta;
  for (auto* c : {&zh2.re, &zh2.im}) *c = amp * (*c);

  // Real ambient coordinates: u1 + i u2 = zh1, v1 - i v2 = zh2, v3 = 0.
  Jet2 coords[4] = {zh1.re, zh1.im, zh2.re, -1.0 * zh2.im};  // u1, u2, v1, v2

  // Frame vectors e_rho, e_phi (e_3 = d/dx3 is constant, only dz3(e_3) = 1).
  CJet<2> dz1[2], dz2[2];  // dz1 = du1 + i dv1, dz2 = du2 + i dv2
  Jet2 gram[2][2];
  Jet2 partials[4][2];
  for (int c = 0; c < 4; ++c)
    for (int dIdx = 0; dIdx < 2; ++dIdx) partials[c][dIdx] = coords[c].partial(dIdx);
  for (int dIdx = 0; dIdx < 2; ++dIdx) {
    dz1[dIdx] = {partials[0][dIdx], partials[2][dIdx]};
    dz2[dIdx] = {partials[1][dIdx], partials[3][dIdx]};
  }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Jet2 s(0.0);
      for (int c = 0; c < 4; ++c) s += partials[c][a] * partials[c][b];
      gram[a][b] = s;
    }

  // Omega'(e_rho, e_phi, e_3) = dz3(e_3) * (dz1^dz2)(e_rho, e_phi).
  CJet<2> det2 = dz1[0] * dz2[1] - dz1[1] * dz2[0];
  Jet2 detG = gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0];
  if (!(detG.v > 0.0)) throw std::runtime_error("phase: degenerate frame");
  Jet2 eps = det2.im / sqrt(detG);

  PhaseSample out;
  out.r1 = r1;
  out.phi = phi;
  out.eps = eps.v;
  // |d eps|^2 = eps_a (g^{-1})^{ab} eps_b over the (rho, phi) block.
  double inv00 = gram[1][1].v / detG.v, inv11 = gram[0][0].v / detG.v,
         inv01 = -gram[0][1].v / detG.v;
  double e0 = eps.g[0], e1 = eps.g[1];
  double q = inv00 * e0 * e0 + 2.0 * inv01 * e0 * e1 + inv11 * e1 * e1;
  out.gradEpsNorm = std::sqrt(std::max(q, 0.0));
  return out;
}

// Conjugate-radius proxy pi / sqrt(sup positive sectional curvature) over a
// log-spaced radial mesh of the chart; +infinity when curvature never
// becomes positive.
inline double conjugateRadiusProxy(double t, const ModelParams& prm, const SmoothCutoff& cutoff,
                                   int nMesh = 400) {
  double rLo = 0.25 * cutoff.b1, rHi = prm.R0 * 0.999;
  double supPos = 0.0;
  for (int i = 0; i <= nMesh; ++i) {
    double r1 = rLo * std::pow(rHi / rLo, double(i) / nMesh);
    MetricSample s = curvature(r1, t, prm, cutoff);
    supPos = std::max(supPos, s.sectional);
  }
  if (!(supPos > 0.0)) return std::numeric_limits<double>::infinity();
  return M_PI / std::sqrt(supPos);
}

struct FiberRadiusReport {
  double minSlopeOverT = 0.0;     // min over mesh of 1/sqrt(1+(dr2/dr1)^2) / t
  double summand1 = 0.0;          // t^{2 eta2 - 1 - 1/m}
  double summand2 = 0.0;          // t^{eta2 - (1 - partA)/m}
  double summand3 = 0.0;          // t^{(1 - 1/m) eta1}
};

// The immersion-slope quantity on [t R0', b2] with b2 = Cb2 t^{1-eta2},
// plus the three closed-form remainder bounds of the partition lemma.
inline FiberRadiusReport fiberRadiusCheck(double t, const ModelParams& prm,
                                          const SmoothCutoff& cutoff, int nMesh = 2000) {
  FiberRadiusReport rep;
  double rLo = t * prm.R0prime, rHi = cutoff.b2;
  if (!(rLo < rHi)) throw std::invalid_argument("fiberRadiusCheck: empty radial range");
  double minSlope = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= nMesh; ++i) {
    double r1 = rLo * std::pow(rHi / rLo, double(i) / nMesh);
    double dr2 = gluedProfileDeriv(r1, t, prm, cutoff);
    minSlope = std::min(minSlope, 1.0 / std::sqrt(1.0 + dr2 * dr2));
  }
  rep.minSlopeOverT = minSlope / t;
  rep.summand1 = std::pow(t, 2.0 * prm.eta2 - 1.0 - 1.0 / prm.m);
  rep.summand2 = std::pow(t, prm.eta2 - (1.0 - prm.partA) / prm.m);
  rep.summand3 = std::pow(t, (1.0 - 1.0 / prm.m) * prm.eta1);
  return rep;
}

}  // namespace sllab
