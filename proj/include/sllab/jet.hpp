#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace sllab {

// Truncated Taylor arithmetic: value, gradient, Hessian, and third-order
// derivative tensor in N independent variables.  The tensors are stored
// dense and kept symmetric by construction.  Enough for third covariant
// derivatives of closed-form tensor fields without differencing noise.
template <int N>
struct Jet {
  double v = 0.0;
  std::array<double, N> g{};
  std::array<double, N * N> h{};
  std::array<double, N * N * N> t{};

  Jet() = default;
  Jet(double value) : v(value) {}

  static Jet variable(double value, int idx) {
    Jet j(value);
    j.g[idx] = 1.0;
    return j;
  }

  double& H(int a, int b) { return h[a * N + b]; }
  double H(int a, int b) const { return h[a * N + b]; }
  double& T(int a, int b, int c) { return t[(a * N + b) * N + c]; }
  double T(int a, int b, int c) const { return t[(a * N + b) * N + c]; }

  Jet& operator+=(const Jet& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) g[i] += o.g[i];
    for (int i = 0; i < N * N; ++i) h[i] += o.h[i];
    for (int i = 0; i < N * N * N; ++i) t[i] += o.t[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) g[i] -= o.g[i];
    for (int i = 0; i < N * N; ++i) h[i] -= o.h[i];
    for (int i = 0; i < N * N * N; ++i) t[i] -= o.t[i];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(const Jet& a) {
    Jet r;
    r.v = -a.v;
    for (int i = 0; i < N; ++i) r.g[i] = -a.g[i];
    for (int i = 0; i < N * N; ++i) r.h[i] = -a.h[i];
    for (int i = 0; i < N * N * N; ++i) r.t[i] = -a.t[i];
    return r;
  }
  friend Jet operator*(double s, Jet a) {
    a.v *= s;
    for (int i = 0; i < N; ++i) a.g[i] *= s;
    for (int i = 0; i < N * N; ++i) a.h[i] *= s;
    for (int i = 0; i < N * N * N; ++i) a.t[i] *= s;
    return a;
  }
  friend Jet operator*(Jet a, double s) { return s * a; }
  friend Jet operator+(Jet a, double s) { a.v += s; return a; }
  friend Jet operator+(double s, Jet a) { a.v += s; return a; }
  friend Jet operator-(Jet a, double s) { a.v -= s; return a; }
  friend Jet operator-(double s, const Jet& a) { return -a + s; }
  friend Jet operator/(Jet a, double s) { return (1.0 / s) * a; }

  friend Jet operator*(const Jet& f, const Jet& gj) {
    Jet r;
    r.v = f.v * gj.v;
    for (int a = 0; a < N; ++a) r.g[a] = f.g[a] * gj.v + f.v * gj.g[a];
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        r.H(a, b) = f.H(a, b) * gj.v + f.g[a] * gj.g[b] + f.g[b] * gj.g[a] + f.v * gj.H(a, b);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          r.T(a, b, c) = f.T(a, b, c) * gj.v + f.v * gj.T(a, b, c) +
                         f.H(a, b) * gj.g[c] + f.H(a, c) * gj.g[b] + f.H(b, c) * gj.g[a] +
                         f.g[a] * gj.H(b, c) + f.g[b] * gj.H(a, c) + f.g[c] * gj.H(a, b);
    return r;
  }

  // f ∘ inner for a univariate f given by derivatives (f, f', f'', f''') at inner.v.
  static Jet compose(const std::array<double, 4>& d, const Jet& x) {
    Jet r;
    r.v = d[0];
    for (int a = 0; a < N; ++a) r.g[a] = d[1] * x.g[a];
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        r.H(a, b) = d[1] * x.H(a, b) + d[2] * x.g[a] * x.g[b];
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          r.T(a, b, c) = d[1] * x.T(a, b, c) +
                         d[2] * (x.g[a] * x.H(b, c) + x.g[b] * x.H(a, c) + x.g[c] * x.H(a, b)) +
                         d[3] * x.g[a] * x.g[b] * x.g[c];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
  friend Jet operator/(double s, const Jet& b) { return s * inv(b); }

  friend Jet inv(const Jet& x) {
    double u = x.v;
    return compose({1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u), -6.0 / (u * u * u * u)}, x);
  }
  friend Jet sqrt(const Jet& x) {
    double s = std::sqrt(x.v);
    return compose({s, 0.5 / s, -0.25 / (s * x.v), 0.375 / (s * x.v * x.v)}, x);
  }
  friend Jet sin(const Jet& x) {
    double s = std::sin(x.v), c = std::cos(x.v);
    return compose({s, c, -s, -c}, x);
  }
  friend Jet cos(const Jet& x) {
    double s = std::sin(x.v), c = std::cos(x.v);
    return compose({c, -s, -c, s}, x);
  }
  friend Jet exp(const Jet& x) {
    double e = std::exp(x.v);
    return compose({e, e, e, e}, x);
  }
  friend Jet log(const Jet& x) {
    double u = x.v;
    return compose({std::log(u), 1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u)}, x);
  }
  // x^alpha for x > 0.
  friend Jet pow(const Jet& x, double alpha) {
    double u = x.v;
    double p = std::pow(u, alpha);
    return compose({p, alpha * p / u, alpha * (alpha - 1.0) * p / (u * u),
                    alpha * (alpha - 1.0) * (alpha - 2.0) * p / (u * u * u)},
                   x);
  }

  // Partial derivative in direction d as a jet of one lower usable order
  // (the third-order block of the result is zeroed, i.e. unknown).
  Jet partial(int d) const {
    Jet r;
    r.v = g[d];
    for (int a = 0; a < N; ++a) r.g[a] = H(d, a);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        r.H(a, b) = T(d, a, b);
    return r;
  }
};

}  // namespace sllab
