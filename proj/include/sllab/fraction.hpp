#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sllab {

// Exact rational arithmetic for exponent bookkeeping.  All exponents that
// appear in the asymptotic tables are affine in (c1, c2) with coefficients
// that are small rationals in the integer branching degree, so int64
// numerators/denominators never come close to overflow.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Frac() = default;
  constexpr Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a) { return Frac(-a.num, a.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) {
    if (b.num == 0) throw std::domain_error("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Frac a, Frac b) { return !(a == b); }
  friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(Frac a, Frac b) { return b < a; }
  friend bool operator>=(Frac a, Frac b) { return b <= a; }
};

// Nearest small rational via continued fractions; exact for the decimal
// parameter values used throughout (0.5, 0.3, 1.2, ...).
inline Frac fracFromDouble(double x, std::int64_t maxDen = 100000) {
  bool neg = x < 0;
  if (neg) x = -x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    std::int64_t ai = static_cast<std::int64_t>(fl);
    std::int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > maxDen) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = v - fl;
    if (rem < 1e-12) break;
    v = 1.0 / rem;
  }
  return Frac(neg ? -p1 : p1, q1);
}

// Affine exponent  a0 + a1*c1 + a2*c2  with exact rational coefficients.
struct AffineExp {
  Frac a0, a1, a2;

  Frac at(Frac c1, Frac c2) const { return a0 + a1 * c1 + a2 * c2; }
  double at(double c1, double c2) const { return a0.value() + a1.value() * c1 + a2.value() * c2; }

  friend AffineExp operator+(const AffineExp& x, const AffineExp& y) {
    return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2};
  }
  friend bool operator==(const AffineExp& x, const AffineExp& y) {
    return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2;
  }
};

}  // namespace sllab
