#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sllab {

// Piecewise polynomial on [breaks.front(), breaks.back()], one coefficient
// vector per interval in the local variable (x - breaks[i]).  Evaluation
// outside the range clamps to the boundary value with zero derivatives
// (all uses have constant tails).
class PiecewisePoly {
 public:
  std::vector<double> breaks;
  std::vector<std::vector<double>> coef;

  PiecewisePoly() = default;
  PiecewisePoly(std::vector<double> b, std::vector<std::vector<double>> c)
      : breaks(std::move(b)), coef(std::move(c)) {
    if (breaks.size() != coef.size() + 1 || breaks.size() < 2)
      throw std::invalid_argument("PiecewisePoly: inconsistent sizes");
  }

  static double polyEval(const std::vector<double>& c, double s) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * s + c[k];
    return v;
  }

  int intervalOf(double x) const {
    if (x <= breaks.front()) return 0;
    if (x >= breaks.back()) return int(coef.size()) - 1;
    int i = int(std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin()) - 1;
    return std::min(i, int(coef.size()) - 1);
  }

  double eval(double x) const {
    double xc = std::clamp(x, breaks.front(), breaks.back());
    int i = intervalOf(xc);
    return polyEval(coef[i], xc - breaks[i]);
  }

  // k-th derivative; zero outside the represented range.
  double deriv(double x, int k) const {
    if (k == 0) return eval(x);
    if (x < breaks.front() || x > breaks.back()) return 0.0;
    int i = intervalOf(x);
    std::vector<double> c = coef[i];
    for (int d = 0; d < k; ++d) {
      if (c.size() <= 1) return 0.0;
      std::vector<double> nc(c.size() - 1);
      for (std::size_t j = 1; j < c.size(); ++j) nc[j - 1] = double(j) * c[j];
      c = std::move(nc);
    }
    return polyEval(c, x - breaks[i]);
  }

  PiecewisePoly derivative() const {
    std::vector<std::vector<double>> dc(coef.size());
    for (std::size_t i = 0; i < coef.size(); ++i) {
      if (coef[i].size() <= 1) {
        dc[i] = {0.0};
      } else {
        dc[i].resize(coef[i].size() - 1);
        for (std::size_t j = 1; j < coef[i].size(); ++j) dc[i][j - 1] = double(j) * coef[i][j];
      }
    }
    return PiecewisePoly(breaks, dc);
  }

  // Antiderivative with prescribed value at the left endpoint; continuous
  // across breakpoints by carrying the running constant.
  PiecewisePoly antiderivative(double valueAtLeft) const {
    std::vector<std::vector<double>> ac(coef.size());
    double carry = valueAtLeft;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      ac[i].resize(coef[i].size() + 1);
      ac[i][0] = carry;
      for (std::size_t j = 0; j < coef[i].size(); ++j) ac[i][j + 1] = coef[i][j] / double(j + 1);
      carry = polyEval(ac[i], breaks[i + 1] - breaks[i]);
    }
    return PiecewisePoly(breaks, ac);
  }

  // Exact integral of x^k * f(x) over the represented range (Gauss rule of
  // sufficient order per interval).
  double moment(int k) const {
    static const std::array<double, 4> gx = {-0.8611363115940526, -0.3399810435848563,
                                             0.3399810435848563, 0.8611363115940526};
    static const std::array<double, 4> gw = {0.3478548451374538, 0.6521451548625461,
                                             0.6521451548625461, 0.3478548451374538};
    double total = 0.0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      double a = breaks[i], b = breaks[i + 1];
      double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      double s = 0.0;
      for (int q = 0; q < 4; ++q) {
        double x = mid + half * gx[q];
        s += gw[q] * std::pow(x, k) * polyEval(coef[i], x - a);
      }
      total += half * s;
    }
    return total;
  }

  int maxDegree() const {
    std::size_t d = 1;
    for (const auto& c : coef) d = std::max(d, c.size());
    return int(d) - 1;
  }
};

// Continuous piecewise-linear function through the given (knot, value) pairs.
inline PiecewisePoly piecewiseLinear(const std::vector<double>& knots,
                                     const std::vector<double>& values) {
  if (knots.size() != values.size() || knots.size() < 2)
    throw std::invalid_argument("piecewiseLinear: inconsistent sizes");
  std::vector<std::vector<double>> c(knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double slope = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    c[i] = {values[i], slope};
  }
  return PiecewisePoly(knots, c);
}

// Convolution of a compactly supported piecewise polynomial (zero outside
// its breakpoint range) with the parabolic kernel
//   K(s) = (3/(4w)) (1 - (s/w)^2) on [-w, w].
// The result is again piecewise polynomial; each refined piece is recovered
// exactly by degree-(d+3) interpolation at Chebyshev nodes, where d is the
// input degree.
inline PiecewisePoly mollify(const PiecewisePoly& f, double w) {
  if (!(w > 0.0)) throw std::invalid_argument("mollify: w must be positive");

  auto convAt = [&](double x) {
    // integral over u of K(x-u) f(u), u restricted to supp f and |x-u| <= w
    double lo = std::max(f.breaks.front(), x - w);
    double hi = std::min(f.breaks.back(), x + w);
    if (!(lo < hi)) return 0.0;
    std::vector<double> cuts = {lo, hi};
    for (double b : f.breaks)
      if (b > lo && b < hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    static const std::array<double, 5> gx = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                             0.5384693101056831, 0.9061798459386640};
    static const std::array<double, 5> gw = {0.2369268850561891, 0.4786286704993665,
                                             0.5688888888888889, 0.4786286704993665,
                                             0.2369268850561891};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      double mid = 0.5 * (cuts[i] + cuts[i + 1]), half = 0.5 * (cuts[i + 1] - cuts[i]);
      double s = 0.0;
      for (int q = 0; q < 5; ++q) {
        double u = mid + half * gx[q];
        double ker = (3.0 / (4.0 * w)) * (1.0 - (x - u) * (x - u) / (w * w));
        s += gw[q] * ker * f.eval(u);
      }
      total += half * s;
    }
    return total;
  };

  // Refined breakpoints: original ones and their +/- w translates.
  std::vector<double> nb;
  for (double b : f.breaks) {
    nb.push_back(b - w);
    nb.push_back(b);
    nb.push_back(b + w);
  }
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end(),
                       [&](double a, double b) { return std::abs(a - b) < 1e-14 * w; }),
           nb.end());

  int deg = f.maxDegree() + 3;
  int nNodes = deg + 1;
  std::vector<std::vector<double>> nc(nb.size() - 1);
  for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
    double a = nb[i], b = nb[i + 1];
    // Chebyshev nodes in local coordinates, Vandermonde solve.
    std::vector<double> s(nNodes), y(nNodes);
    for (int q = 0; q < nNodes; ++q) {
      double u = std::cos(M_PI * (2.0 * q + 1.0) / (2.0 * nNodes));
      s[q] = 0.5 * (b - a) * (u + 1.0);
      y[q] = convAt(a + s[q]);
    }
    // Newton divided differences, then convert to monomial coefficients.
    std::vector<double> dd = y;
    for (int lvl = 1; lvl < nNodes; ++lvl)
      for (int q = nNodes - 1; q >= lvl; --q)
        dd[q] = (dd[q] - dd[q - 1]) / (s[q] - s[q - lvl]);
    // Horner-style accumulation of the Newton form into monomials.
    std::vector<double> c(nNodes, 0.0);
    c[0] = dd[nNodes - 1];
    for (int q = nNodes - 2; q >= 0; --q) {
      for (int j = nNodes - 1; j >= 1; --j) c[j] = c[j - 1] - s[q] * c[j];
      c[0] = dd[q] - s[q] * c[0];
    }
    nc[i] = c;
  }
  return PiecewisePoly(nb, nc);
}

}  // namespace sllab
