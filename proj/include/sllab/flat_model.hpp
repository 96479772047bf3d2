#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sllab/params.hpp"

namespace sllab {

using Complex = std::complex<double>;

// A point of the flat model R^2 x S^1 x R^3 in real coordinates
// (u1, u2, u3, v1, v2, v3); u3 lives on a circle of circumference l.
struct AmbientPoint {
  double u1 = 0, u2 = 0, u3 = 0, v1 = 0, v2 = 0, v3 = 0;

  Complex z1() const { return {u1, v1}; }
  Complex z2() const { return {u2, v2}; }
  Complex z3() const { return {u3, v3}; }
  Complex zh1() const { return {u1, u2}; }   // u1 + i u2
  Complex zh2() const { return {v1, -v2}; }  // v1 - i v2

  double rh1() const { return std::abs(zh1()); }
  double th1() const { return std::arg(zh1()); }
  double rh2() const { return std::abs(zh2()); }
  double th2() const { return std::arg(zh2()); }

  void normalizeCircle(double l) {
    u3 = std::fmod(u3, l);
    if (u3 < 0) u3 += l;
  }

  static AmbientPoint fromViews(Complex zh1v, double u3v, Complex zh2v, double v3v, double l) {
    AmbientPoint p;
    p.u1 = zh1v.real();
    p.u2 = zh1v.imag();
    p.v1 = zh2v.real();
    p.v2 = -zh2v.imag();
    p.u3 = u3v;
    p.v3 = v3v;
    p.normalizeCircle(l);
    return p;
  }
};

// Tangent vector of the flat model in the same real coordinates.
struct AmbientVector {
  double u1 = 0, u2 = 0, u3 = 0, v1 = 0, v2 = 0, v3 = 0;

  Complex dz1() const { return {u1, v1}; }
  Complex dz2() const { return {u2, v2}; }
  Complex dz3() const { return {u3, v3}; }
  Complex dzh1() const { return {u1, u2}; }
  Complex dzh2() const { return {v1, -v2}; }

  double dot(const AmbientVector& o) const {
    return u1 * o.u1 + u2 * o.u2 + u3 * o.u3 + v1 * o.v1 + v2 * o.v2 + v3 * o.v3;
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Point of the domain L ~ R^2 x S^1; x3 lives on the circle of length l.
struct DomainPoint {
  double x1 = 0, x2 = 0, x3 = 0;

  Complex zeta() const { return {x1, x2}; }
  double rho() const { return std::abs(zeta()); }
  double phi() const { return std::arg(zeta()); }
  // Downstairs radius |(x1 + i x2)^m|.
  double r(int m) const { return std::pow(rho(), m); }

  void normalizeCircle(double l) {
    x3 = std::fmod(x3, l);
    if (x3 < 0) x3 += l;
  }
};

// Kaehler form of the flat model evaluated on a pair of tangent vectors:
// omega' = sum_k (i/2) dz_k ^ dzbar_k = Re(dzh1 ^ dzh2) + du3 ^ dv3.
inline double omegaPrime(const AmbientVector& v, const AmbientVector& w) {
  double s = 0.0;
  s -= std::imag(v.dz1() * std::conj(w.dz1()));
  s -= std::imag(v.dz2() * std::conj(w.dz2()));
  s -= std::imag(v.dz3() * std::conj(w.dz3()));
  return s;
}

// Holomorphic volume form Omega' = dz1 ^ dz2 ^ dz3 on a tangent triple.
inline Complex bigOmegaPrime(const AmbientVector& a, const AmbientVector& b,
                             const AmbientVector& c) {
  Complex m[3][3] = {{a.dz1(), b.dz1(), c.dz1()},
                     {a.dz2(), b.dz2(), c.dz2()},
                     {a.dz3(), b.dz3(), c.dz3()}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Residual of the two rotated-coordinate identities evaluated on (v, w):
//   (i/2)(dz1^dzbar1 + dz2^dzbar2) = Re(dzh1 ^ dzh2)
//   dz1 ^ dz2 = -(1/2) Im(dzh1^dzhbar1 + dzh2^dzhbar2) - i Im(dzh1 ^ dzh2)
inline double rotationIdentityResidual(const AmbientVector& v, const AmbientVector& w) {
  auto wedge = [](Complex av, Complex aw, Complex bv, Complex bw) {
    return av * bw - aw * bv;
  };
  // Left sides.
  double lhs1 = -std::imag(v.dz1() * std::conj(w.dz1())) - std::imag(v.dz2() * std::conj(w.dz2()));
  Complex lhs2 = wedge(v.dz1(), w.dz1(), v.dz2(), w.dz2());
  // Right sides in the rotated coordinates.
  Complex hw = wedge(v.dzh1(), w.dzh1(), v.dzh2(), w.dzh2());
  double imSelf = std::imag(wedge(v.dzh1(), w.dzh1(), std::conj(v.dzh1()), std::conj(w.dzh1()))) +
                  std::imag(wedge(v.dzh2(), w.dzh2(), std::conj(v.dzh2()), std::conj(w.dzh2())));
  double rhs1 = std::real(hw);
  Complex rhs2 = {-0.5 * imSelf, -std::imag(hw)};
  return std::max(std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2));
}

// The exact deformation family: zh1 = (x1+ix2)^m, u3 = x3,
// zh2 = a^{1/m} (x1+ix2), v3 = 0.  Integer powers of zeta only, so no
// branch-cut choices are ever made in the domain.
inline AmbientPoint psiA(const DomainPoint& x, const ModelParams& prm, double amplitude) {
  Complex zeta = x.zeta();
  Complex zh1 = std::pow(zeta, prm.m);
  double amp = amplitude > 0.0 ? std::pow(amplitude, 1.0 / prm.m) : 0.0;
  return AmbientPoint::fromViews(zh1, x.x3, amp * zeta, 0.0, prm.l);
}

inline AmbientPoint psiA(const DomainPoint& x, const ModelParams& prm) {
  return psiA(x, prm, prm.a);
}

// Partial scaling of the ambient model: (zh1, u3, zh2, v3) -> (t zh1, u3, t zh2, v3).
inline AmbientPoint partialScaling(const AmbientPoint& p, double t, double l) {
  return AmbientPoint::fromViews(t * p.zh1(), p.u3, t * p.zh2(), p.v3, l);
}

// t-scaled family via the amplitude route: amplitude a * t^(m-1).
inline AmbientPoint psiAScaled(const DomainPoint& x, double t, const ModelParams& prm) {
  if (!(t > 0.0)) throw std::invalid_argument("psiAScaled: t must be positive");
  return psiA(x, prm, prm.a * std::pow(t, prm.m - 1));
}

// Same map through the partial scaling route: scale the domain by t^{1/m}
// and partially scale the ambient image of the unscaled family.
inline AmbientPoint psiAScaledViaScaling(const DomainPoint& x, double t, const ModelParams& prm) {
  if (!(t > 0.0)) throw std::invalid_argument("psiAScaledViaScaling: t must be positive");
  double s = std::pow(t, 1.0 / prm.m);
  DomainPoint y{x.x1 / s, x.x2 / s, x.x3};
  return partialScaling(psiA(y, prm), t, prm.l);
}

// Generating potential h^a = (m/(m+1)) a^{1/m} Re((x1+i x2)^{m+1}).
inline double potentialH(const DomainPoint& x, const ModelParams& prm, double amplitude) {
  Complex zeta = x.zeta();
  double amp = amplitude > 0.0 ? std::pow(amplitude, 1.0 / prm.m) : 0.0;
  return (double(prm.m) / (prm.m + 1)) * amp * std::real(std::pow(zeta, prm.m + 1));
}

inline double potentialH(const DomainPoint& x, const ModelParams& prm) {
  return potentialH(x, prm, prm.a);
}

// Euclidean gradient of h^a in (x1, x2, x3):
// dh = m a^{1/m} (Re(zeta^m), -Im(zeta^m), 0) since d/dzeta Re(zeta^{m+1})
// contributes (m+1) zeta^m.
inline std::array<double, 3> potentialGradient(const DomainPoint& x, const ModelParams& prm,
                                               double amplitude) {
  Complex zeta = x.zeta();
  double amp = amplitude > 0.0 ? std::pow(amplitude, 1.0 / prm.m) : 0.0;
  Complex zm = std::pow(zeta, prm.m);
  // d/dx1 Re(zeta^{m+1}) = (m+1) Re(zeta^m), d/dx2 Re(zeta^{m+1}) = -(m+1) Im(zeta^m).
  return {prm.m * amp * std::real(zm), -double(prm.m) * amp * std::imag(zm), 0.0};
}

// The covering symplectomorphism Phi of the cotangent charts:
// (x, p) -> ( (x1+ix2)^m, x3, (1/m)(p_{x1} - i p_{x2})(x1+ix2)^{1-m}, p_{x3} ).
inline AmbientPoint coveringPhi(const DomainPoint& x, const std::array<double, 3>& p,
                                const ModelParams& prm) {
  Complex zeta = x.zeta();
  if (std::abs(zeta) == 0.0) throw std::invalid_argument("coveringPhi: branch core input");
  Complex zh1 = std::pow(zeta, prm.m);
  Complex zh2 = (1.0 / prm.m) * Complex(p[0], -p[1]) * std::pow(zeta, 1 - prm.m);
  return AmbientPoint::fromViews(zh1, x.x3, zh2, p[2], prm.l);
}

// Distance of Phi(graph dh^a) from the model image {a zh1 - zh2^m = 0, v3 = 0}.
inline double graphMatchesImage(const DomainPoint& x, const ModelParams& prm) {
  AmbientPoint q = coveringPhi(x, potentialGradient(x, prm, prm.a), prm);
  return std::abs(prm.a * q.zh1() - std::pow(q.zh2(), prm.m)) + std::abs(q.v3);
}

// Exact Jacobian of the t-scaled family: the three pushforward frame
// vectors D(psi)(d/dx1), D(psi)(d/dx2), D(psi)(d/dx3).
inline std::array<AmbientVector, 3> psiAScaledFrame(const DomainPoint& x, double t,
                                                    const ModelParams& prm) {
  Complex zeta = x.zeta();
  double amplitude = prm.a * std::pow(t, prm.m - 1);
  double amp = std::pow(amplitude, 1.0 / prm.m);
  Complex dzh1_dzeta = double(prm.m) * std::pow(zeta, prm.m - 1);
  std::array<AmbientVector, 3> f{};
  // d/dx1: dzeta = 1; d/dx2: dzeta = i.
  for (int k = 0; k < 2; ++k) {
    Complex dzeta = (k == 0) ? Complex(1, 0) : Complex(0, 1);
    Complex dzh1 = dzh1_dzeta * dzeta;
    Complex dzh2 = amp * dzeta;
    f[k].u1 = dzh1.real();
    f[k].u2 = dzh1.imag();
    f[k].v1 = dzh2.real();
    f[k].v2 = -dzh2.imag();
  }
  f[2].u3 = 1.0;
  return f;
}

struct SlResidual {
  double omega = 0.0;    // max |omega'(e_i, e_j)| over frame pairs
  double imOmega = 0.0;  // |Im Omega'(e1,e2,e3)| / sqrt(det Gram)
};

// Both vanish in exact arithmetic: the family is calibrated by Re Omega'.
inline SlResidual slResidual(const DomainPoint& x, double t, const ModelParams& prm) {
  auto f = psiAScaledFrame(x, t, prm);
  SlResidual r;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      r.omega = std::max(r.omega, std::abs(omegaPrime(f[i], f[j])));
  double g11 = f[0].dot(f[0]), g12 = f[0].dot(f[1]), g13 = f[0].dot(f[2]);
  double g22 = f[1].dot(f[1]), g23 = f[1].dot(f[2]), g33 = f[2].dot(f[2]);
  double det = g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13) +
               g13 * (g12 * g23 - g22 * g13);
  if (!(det > 0.0)) throw std::runtime_error("slResidual: degenerate frame");
  r.imOmega = std::abs(std::imag(bigOmegaPrime(f[0], f[1], f[2]))) / std::sqrt(det);
  return r;
}

}  // namespace sllab
