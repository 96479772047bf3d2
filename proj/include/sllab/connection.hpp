#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sllab/jet.hpp"
#include "sllab/params.hpp"

namespace sllab {

// Total-space chart coordinates are ordered
//   0: rh1   1: th1   2: u3   3: p_r   4: p_th   5: p_u3
// Everything in sight depends only on (rh1, th1, p_r, p_th); these four are
// the jet variables, in that order.
using Jet4 = Jet<4>;

struct ConnectionSample {
  double rh1 = 0, th1 = 0, pr = 0, pth = 0, pu3 = 0;
  std::array<double, 4> betaNorm{};  // ||nabla^k beta|| for k = 0..3
};

namespace detail {

inline int jetVarOfCoord(int c) {
  switch (c) {
    case 0: return 0;
    case 1: return 1;
    case 3: return 2;
    case 4: return 3;
    default: return -1;  // u3 and p_u3: nothing depends on them
  }
}

template <typename T>
T partialCoord(const T& j, int coord) {
  int v = jetVarOfCoord(coord);
  if (v < 0) return T();
  return j.partial(v);
}

}  // namespace detail

// Closed-form data of the exact model leaf with amplitude `amp`:
// A = 1 + m^{-2} amp^{2/m} rh1^{2(1-m)/m}, B = rh1^2 A, and the Levi-Civita
// connection forms of A drh1^2 + B dth1^2 + du3^2 arranged as the 6x6 matrix
// with only the upper-left 2x2 block nonzero.
struct LeafChart {
  int m;
  double amp;

  Jet4 A(const Jet4& r) const {
    double c = std::pow(amp, 2.0 / m) / double(m * m);
    return 1.0 + c * pow(r, 2.0 * (1.0 - m) / m);
  }
  Jet4 B(const Jet4& r) const { return r * r * A(r); }
  // kappa = m^{-1} amp^{1/m} rh1^{(1-m)/m}
  Jet4 kappa(const Jet4& r) const {
    return (std::pow(amp, 1.0 / m) / m) * pow(r, (1.0 - m) / double(m));
  }
};

// Connection coefficients W[J][I][d]: the 1-form entry (row J, column I) of
// the matrix, along coordinate direction d in {0, 1}.
inline void connectionForms(const LeafChart& lc, const Jet4& r, Jet4 W[2][2][2]) {
  Jet4 A = lc.A(r);
  Jet4 B = lc.B(r);
  Jet4 Ad = A.partial(0);
  Jet4 Bd = B.partial(0);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int d = 0; d < 2; ++d) W[j][i][d] = Jet4();
  W[0][0][0] = 0.5 * (Ad / A);   // omega^r_r   = (A'/2A) drh1
  W[1][0][1] = 0.5 * (Bd / B);   // omega^th_r  = (B'/2B) dth1
  W[0][1][1] = -0.5 * (Bd / A);  // omega^r_th  = -(B'/2A) dth1
  W[1][1][0] = 0.5 * (Bd / B);   // omega^th_th = (B'/2B) drh1
}

// The 3-form beta on the cotangent chart of the exact model leaf, as a full
// antisymmetric 6x6x6 array of jets in (rh1, th1, p_r, p_th).
inline std::vector<Jet4> betaComponents(const LeafChart& lc, double rh1, double th1, double pr,
                                        double pth) {
  if (!(rh1 > 0.0)) throw std::invalid_argument("betaComponents: need rh1 > 0");
  Jet4 r = Jet4::variable(rh1, 0);
  Jet4 th = Jet4::variable(th1, 1);
  Jet4 Pr = Jet4::variable(pr, 2);
  Jet4 Pth = Jet4::variable(pth, 3);

  std::vector<Jet4> Bfull(6 * 6 * 6);
  auto add = [&](int a, int b, int c, const Jet4& v) {
    int idx[3] = {a, b, c};
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    double sgn[6] = {1, 1, 1, -1, -1, -1};
    for (int p = 0; p < 6; ++p) {
      int i = idx[perm[p][0]], j = idx[perm[p][1]], k = idx[perm[p][2]];
      Bfull[(i * 6 + j) * 6 + k] += sgn[p] * v;
    }
  };

  Jet4 A = lc.A(r);
  Jet4 rinv = inv(r);
  Jet4 kap = lc.kappa(r);
  Jet4 ang = ((1.0 + lc.m) / double(lc.m)) * th;
  Jet4 cosT = cos(ang), sinT = sin(ang);

  // ( [A r - r^{-3} p_th^2] dr^dth - r^{-2} p_th dr^dp_r + p_r dth^dp_r
  //   + r^{-2} p_th dth^dp_th - r^{-1} dp_r^dp_th ) ^ dp_u3
  add(0, 1, 5, A * r - rinv * rinv * rinv * (Pth * Pth));
  add(0, 3, 5, -1.0 * (rinv * rinv) * Pth);
  add(1, 3, 5, Pr);
  add(1, 4, 5, (rinv * rinv) * Pth);
  add(3, 4, 5, -1.0 * rinv);

  // - kappa cos(ang) ( p_r dr^dth + r^{-1} dr^dp_th + r dth^dp_r ) ^ dp_u3
  add(0, 1, 5, -1.0 * kap * cosT * Pr);
  add(0, 4, 5, -1.0 * kap * cosT * rinv);
  add(1, 3, 5, -1.0 * kap * cosT * r);

  // + kappa sin(ang) ( 2 r^{-1} p_th dr^dth - dr^dp_r + dth^dp_th ) ^ dp_u3
  add(0, 1, 5, 2.0 * kap * sinT * rinv * Pth);
  add(0, 3, 5, -1.0 * kap * sinT);
  add(1, 4, 5, kap * sinT);

  // + ( p_r dr^dth + r^{-1} dr^dp_th - r dth^dp_r ) ^ du3
  add(0, 1, 2, Pr);
  add(0, 4, 2, rinv);
  add(1, 3, 2, -1.0 * r);

  return Bfull;
}

// Covariant derivatives of beta up to order 3 and their pointwise norms in
// the adapted orthonormal coframe (horizontal g, vertical g^{-1}).
inline ConnectionSample connectionBeta(const LeafChart& lc, double rh1, double th1, double pr,
                                       double pth) {
  ConnectionSample out;
  out.rh1 = rh1;
  out.th1 = th1;
  out.pr = pr;
  out.pth = pth;

  Jet4 r = Jet4::variable(rh1, 0);
  Jet4 W[2][2][2];
  connectionForms(lc, r, W);

  // Orthonormal coframe matrix M (rows: frame index, cols: coordinate dx).
  double Av = lc.A(r).v, Bv = lc.B(r).v;
  double w00 = W[0][0][0].v, w10_1 = W[1][0][1].v, w01_1 = W[0][1][1].v, w11_0 = W[1][1][0].v;
  Eigen::Matrix<double, 6, 6> M = Eigen::Matrix<double, 6, 6>::Zero();
  M(0, 0) = std::sqrt(Av);
  M(1, 1) = std::sqrt(Bv);
  M(2, 2) = 1.0;
  // delta p_r = dp_r - p_r w^r_r - p_th w^th_r, scaled by A^{-1/2}
  M(3, 3) = 1.0 / std::sqrt(Av);
  M(3, 0) = -(pr * w00) / std::sqrt(Av);
  M(3, 1) = -(pth * w10_1) / std::sqrt(Av);
  // delta p_th = dp_th - p_r w^r_th - p_th w^th_th, scaled by B^{-1/2}
  M(4, 4) = 1.0 / std::sqrt(Bv);
  M(4, 0) = -(pth * w11_0) / std::sqrt(Bv);
  M(4, 1) = -(pr * w01_1) / std::sqrt(Bv);
  M(5, 5) = 1.0;
  Eigen::Matrix<double, 6, 6> Minv = M.inverse();

  auto frameNorm = [&](const std::vector<double>& T, int rank) {
    // contract each slot with Minv and take the Frobenius norm
    std::vector<double> cur = T;
    int n = 1;
    for (int s = 0; s < rank; ++s) n *= 6;
    for (int slot = 0; slot < rank; ++slot) {
      std::vector<double> nxt(n, 0.0);
      int stride = 1;
      for (int s = rank - 1; s > slot; --s) stride *= 6;
      for (int idx = 0; idx < n; ++idx) {
        int jv = (idx / stride) % 6;
        // replace index jv by frame index i: accumulate into positions
        // with that slot set to i
        int base = idx - jv * stride;
        for (int i = 0; i < 6; ++i) nxt[base + i * stride] += Minv(jv, i) * cur[idx];
      }
      cur = std::move(nxt);
    }
    double s2 = 0.0;
    for (double v : cur) s2 += v * v;
    return std::sqrt(s2);
  };

  // T0 = beta (rank 3), then successive covariant derivatives prepending a
  // slot.  Jets lose one usable order per derivative; products at each
  // stage are truncated to the order still needed, which keeps the rank-5
  // and rank-6 stages cheap.
  auto mulVGH = [](const Jet4& f, const Jet4& g) {  // keep value, grad, Hessian
    Jet4 r;
    r.v = f.v * g.v;
    for (int a = 0; a < 4; ++a) r.g[a] = f.g[a] * g.v + f.v * g.g[a];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        r.H(a, b) = f.H(a, b) * g.v + f.g[a] * g.g[b] + f.g[b] * g.g[a] + f.v * g.H(a, b);
    return r;
  };
  // Applies one covariant derivative to a rank-`rank` tensor of jets; the
  // binary op performs the (possibly truncated) product W * T.
  auto covDeriv = [&](const std::vector<Jet4>& Tin, int rankIn, auto mul) {
    int sub = int(Tin.size());
    std::vector<Jet4> Tn(std::size_t(6) * sub);
    for (int d = 0; d < 6; ++d) {
      for (int idx = 0; idx < sub; ++idx) {
        Jet4 v = detail::partialCoord(Tin[idx], d);
        if (d < 2) {
          int stride = sub;
          for (int slot = 0; slot < rankIn; ++slot) {
            stride /= 6;
            int jv = (idx / stride) % 6;
            if (jv < 2) {
              int base = idx - jv * stride;
              for (int J = 0; J < 2; ++J) v -= mul(W[J][jv][d], Tin[base + J * stride]);
            }
          }
        }
        Tn[std::size_t(d) * sub + idx] = v;
      }
    }
    return Tn;
  };

  auto norms = [&](const std::vector<Jet4>& T, int rank) {
    std::vector<double> vals(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) vals[i] = T[i].v;
    return frameNorm(vals, rank);
  };

  std::vector<Jet4> T0 = betaComponents(lc, rh1, th1, pr, pth);
  out.betaNorm[0] = norms(T0, 3);
  std::vector<Jet4> T1 = covDeriv(T0, 3, [](const Jet4& a, const Jet4& b) { return a * b; });
  out.betaNorm[1] = norms(T1, 4);
  std::vector<Jet4> T2 = covDeriv(T1, 4, mulVGH);
  out.betaNorm[2] = norms(T2, 5);

  // Final derivative on plain values: d T2 is the jet gradient, corrections
  // use connection-form values only.
  {
    int sub = int(T2.size());
    std::vector<double> T3(std::size_t(6) * sub, 0.0);
    for (int d = 0; d < 6; ++d) {
      int var = detail::jetVarOfCoord(d);
      for (int idx = 0; idx < sub; ++idx) {
        double v = var >= 0 ? T2[idx].g[var] : 0.0;
        if (d < 2) {
          int stride = sub;
          for (int slot = 0; slot < 5; ++slot) {
            stride /= 6;
            int jv = (idx / stride) % 6;
            if (jv < 2) {
              int base = idx - jv * stride;
              for (int J = 0; J < 2; ++J) v -= W[J][jv][d].v * T2[base + J * stride].v;
            }
          }
        }
        T3[std::size_t(d) * sub + idx] = v;
      }
    }
    out.betaNorm[3] = frameNorm(T3, 6);
  }
  return out;
}

// Decay coefficient of the model connection in the complex chart: the
// displayed leading coefficient has modulus ~ ((m-1)/m^3) amp^{2/m}
// rh1^{(2-3m)/m} / A(rh1), which decays like rh1^{(2-3m)/m}.
inline double connectionDecayCoefficient(double rh1, int m, double amp) {
  double A = 1.0 + std::pow(amp, 2.0 / m) * std::pow(rh1, 2.0 * (1.0 - m) / m) / double(m * m);
  return (double(m - 1) / double(m * m * m)) * std::pow(amp, 2.0 / m) *
         std::pow(rh1, (2.0 - 3.0 * m) / m) / A;
}

// Scaling sweep: sup of betaNorm_k over a sample mesh of the rescaled leaf
// (radius in [t R0', R0], fiber momenta of frame length ~ pScale * t).  The
// momentum coordinates carry the coframe factors sqrt(A), sqrt(B) so that
// every sampled covector has the same length in the adapted metric.
inline std::array<double, 4> betaNormSup(double t, const ModelParams& prm, int nr = 12,
                                         int nth = 6, double pScale = 0.5) {
  LeafChart lc{prm.m, prm.a * std::pow(t, prm.m - 1)};
  double rLo = t * prm.R0prime, rHi = prm.R0;
  std::array<double, 4> sup{};
  const std::array<std::array<double, 2>, 5> pdirs = {
      {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.70710678118654752, 0.70710678118654752},
       {-0.70710678118654752, 0.70710678118654752}}};
  for (int i = 0; i <= nr; ++i) {
    double rh1 = rLo * std::pow(rHi / rLo, double(i) / nr);
    Jet4 rj = Jet4::variable(rh1, 0);
    double sA = std::sqrt(lc.A(rj).v), sB = std::sqrt(lc.B(rj).v);
    for (int j = 0; j < nth; ++j) {
      double th1 = 2.0 * M_PI * prm.m * double(j) / nth;
      for (const auto& pd : pdirs) {
        ConnectionSample s =
            connectionBeta(lc, rh1, th1, pScale * t * sA * pd[0], pScale * t * sB * pd[1]);
        for (int k = 0; k < 4; ++k) sup[k] = std::max(sup[k], s.betaNorm[k]);
      }
    }
  }
  return sup;
}

}  // namespace sllab
