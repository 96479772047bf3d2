#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace sllab {

// Adaptive Gauss-Kronrod (7-15) quadrature with recursive bisection.  For
// integrands with an algebraic singularity (or strong grading) at the left
// endpoint use integrateGraded, which pre-splits geometrically toward it.
namespace gk {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss weights.
inline constexpr std::array<double, 15> xk = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr std::array<double, 15> wk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr std::array<double, 8> wg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870, 0.0};

}  // namespace gk

struct QuadResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  int cells = 0;
  bool converged = true;
};

inline void gkPanel(const std::function<double(double)>& f, double a, double b, double& val,
                    double& err) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    double fx = f(mid + half * gk::xk[i]);
    k += gk::wk[i] * fx;
    if (i % 2 == 1) g += gk::wg[i / 2] * fx;
  }
  val = half * k;
  err = std::abs(half * (k - g));
}

inline void gkAdapt(const std::function<double(double)>& f, double a, double b, double tol,
                    int depth, QuadResult& out) {
  double val, err;
  gkPanel(f, a, b, val, err);
  if (err <= tol || depth >= 48) {
    out.value += val;
    out.errorEstimate += err;
    out.cells += 1;
    if (err > tol && depth >= 48) out.converged = false;
    return;
  }
  double mid = 0.5 * (a + b);
  gkAdapt(f, a, mid, 0.5 * tol, depth + 1, out);
  gkAdapt(f, mid, b, 0.5 * tol, depth + 1, out);
}

inline QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                            double relTol) {
  if (!(b > a)) return {};
  QuadResult probe;
  double v0, e0;
  gkPanel(f, a, b, v0, e0);
  double scale = std::max(std::abs(v0), 1e-300);
  QuadResult out;
  gkAdapt(f, a, b, relTol * scale, 0, out);
  return out;
}

// Integral over (a, b] with geometric grading toward a (which may be 0);
// rings shrink by factor 2 until the innermost ring is below relTol times
// the running total in magnitude bound.
inline QuadResult integrateGraded(const std::function<double(double)>& f, double a, double b,
                                  double relTol, int maxRings = 80) {
  if (!(b > a)) return {};
  QuadResult out;
  double hi = b;
  for (int ring = 0; ring < maxRings; ++ring) {
    double lo = a + 0.5 * (hi - a);
    QuadResult part = integrate(f, lo, hi, relTol);
    out.value += part.value;
    out.errorEstimate += part.errorEstimate;
    out.cells += part.cells;
    out.converged = out.converged && part.converged;
    hi = lo;
    if (std::abs(part.value) < relTol * std::max(std::abs(out.value), 1e-300) && ring > 4) break;
  }
  return out;
}

// Periodic trapezoid rule on [0, period); spectrally accurate for smooth
// periodic integrands.
inline double periodicTrapezoid(const std::function<double(double)>& f, double period, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(period * double(i) / n);
  return s * period / n;
}

}  // namespace sllab
