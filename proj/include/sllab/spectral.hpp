#pragma once

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sllab/cutoff.hpp"
#include "sllab/geometry.hpp"
#include "sllab/params.hpp"
#include "sllab/rng.hpp"

namespace sllab {

// Discrete spectral comparison between the singular product metric on a
// branched solid torus and its smoothed companion, plus an exploratory probe
// of the first-eigenvalue/Sobolev behaviour of the glued tube metric.
//
// Discretization: metric-weighted finite volumes on a structured (r, phi,
// theta) grid (7-point stencil).  For a diagonal metric diag(w_r^2, w_phi^2,
// w_theta^2) in coordinates (r, phi, theta) the Dirichlet energy is
//   Int (u_r^2 w_phi w_theta / w_r) + (u_phi^2 w_r w_theta / w_phi) + ...
// which assembles from face conductances; the vanishing phi-weight at the
// axis then produces the natural (regular) axis condition without special
// stencils.

struct MeshWeights {
  // Per-axis metric weight factors as functions of r (the only coordinate
  // the metrics depend on).
  std::function<double(double)> wr, wphi, wtheta;
};

struct BranchedMesh {
  int m = 2;
  double l = 1.0;
  double rInner = 0.0, rOuter = 1.0;
  int nr = 8, nphi = 8, ntheta = 8;
  double phiPeriod = 2.0 * std::numbers::pi;
  double thetaPeriod = 2.0 * std::numbers::pi;
  bool dirichletInner = true, dirichletOuter = true;
  bool periodicR = false;  // wrap the radial direction (flat-box oracles only)
  MeshWeights gPrime;   // singular product weighting
  MeshWeights gSmooth;  // smoothed comparison weighting
  int exhaustionJ = 0;

  double dr() const { return (rOuter - rInner) / nr; }
  double rCenter(int i) const { return rInner + (i + 0.5) * dr(); }
};

// Monotone degree-5 smoothstep from lo to hi on [x0, x1].
inline double smoothstep5(double x, double x0, double x1, double lo, double hi) {
  if (x <= x0) return lo;
  if (x >= x1) return hi;
  double u = (x - x0) / (x1 - x0);
  double s = u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
  return lo + (hi - lo) * s;
}

inline BranchedMesh buildBranchedMesh(int m, double l, double epsOuter, int nr, int nphi,
                                      int ntheta, int exhaustionJ = 0, int j0 = 8) {
  if (nr < 4 || nphi < 4 || ntheta < 4)
    throw std::invalid_argument("buildBranchedMesh: resolutions must be >= 4");
  BranchedMesh mesh;
  mesh.m = m;
  mesh.l = l;
  mesh.exhaustionJ = exhaustionJ;
  mesh.rInner = 1.0 / double(exhaustionJ + j0);
  mesh.rOuter = epsOuter;
  if (!(mesh.rInner < mesh.rOuter))
    throw std::invalid_argument("buildBranchedMesh: inner cutoff must lie inside epsOuter");
  mesh.nr = nr;
  mesh.nphi = nphi;
  mesh.ntheta = ntheta;
  double wth = l / (2.0 * std::numbers::pi);
  mesh.gPrime = {[](double) { return 1.0; },
                 [m](double r) { return double(m) * r; },
                 [wth](double) { return wth; }};
  // Smoothed weighting: the angular factor m is replaced by m*h(r) with h a
  // monotone smoothstep from 1/m (regular axis) to 1 across [eps/3, 2eps/3].
  double e3 = epsOuter / 3.0;
  mesh.gSmooth = {[](double) { return 1.0; },
                  [m, e3](double r) {
                    double h = smoothstep5(r, e3, 2.0 * e3, 1.0 / m, 1.0);
                    return double(m) * h * r;
                  },
                  [wth](double) { return wth; }};
  return mesh;
}

// Cellwise dilatation bound sup(w'_phi/w_phi) over the mesh; equals m where
// h has reached its floor, 1 where the metrics agree.
inline double dilatationBound(const BranchedMesh& mesh) {
  double worst = 1.0;
  for (int i = 0; i < mesh.nr; ++i) {
    double r = mesh.rCenter(i);
    worst = std::max(worst, mesh.gPrime.wphi(r) / mesh.gSmooth.wphi(r));
  }
  return worst;
}

struct DiscreteOperator {
  Eigen::SparseMatrix<double> stiffness, mass;
  bool hasDirichlet = true;
  int n = 0;
};

// Assemble the finite-volume stiffness/mass pair on the structured grid for
// one weighting.  phi and theta are always periodic; r is Dirichlet-walled,
// zero-flux, or wrapped per the mesh flags.
inline DiscreteOperator assembleOperator(const BranchedMesh& mesh, const MeshWeights& w) {
  int nr = mesh.nr, np = mesh.nphi, nt = mesh.ntheta;
  double dr = mesh.dr();
  double dp = mesh.phiPeriod / np, dt = mesh.thetaPeriod / nt;
  auto idx = [&](int i, int j, int k) { return (i * np + j) * nt + k; };
  int n = nr * np * nt;

  std::vector<Eigen::Triplet<double>> ks, ms;
  ks.reserve(std::size_t(n) * 7);
  auto addPair = [&](int a, int b, double c) {
    ks.emplace_back(a, a, c);
    ks.emplace_back(b, b, c);
    ks.emplace_back(a, b, -c);
    ks.emplace_back(b, a, -c);
  };
  for (int i = 0; i < nr; ++i) {
    double r = mesh.rCenter(i);
    double vol = w.wr(r) * w.wphi(r) * w.wtheta(r) * dr * dp * dt;
    for (int j = 0; j < np; ++j)
      for (int k = 0; k < nt; ++k) {
        int c = idx(i, j, k);
        ms.emplace_back(c, c, vol);
        // r-faces
        if (i + 1 < nr) {
          double rf = mesh.rInner + (i + 1) * dr;
          double cond = w.wphi(rf) * w.wtheta(rf) / w.wr(rf) * dp * dt / dr;
          addPair(c, idx(i + 1, j, k), cond);
        } else if (mesh.periodicR) {
          double rf = mesh.rOuter;
          double cond = w.wphi(rf) * w.wtheta(rf) / w.wr(rf) * dp * dt / dr;
          addPair(c, idx(0, j, k), cond);
        }
        // phi-face to neighbour j+1 (periodic)
        {
          double cond = w.wr(r) * w.wtheta(r) / w.wphi(r) * dr * dt / dp;
          addPair(c, idx(i, (j + 1) % np, k), cond);
        }
        // theta-face to neighbour k+1 (periodic)
        {
          double cond = w.wr(r) * w.wphi(r) / w.wtheta(r) * dr * dp / dt;
          addPair(c, idx(i, j, (k + 1) % nt), cond);
        }
      }
    // boundary walls at half-cell distance
    if (i == 0 && mesh.dirichletInner) {
      double rf = mesh.rInner;
      double cond = w.wphi(rf) * w.wtheta(rf) / w.wr(rf) * dp * dt / (0.5 * dr);
      for (int j = 0; j < np; ++j)
        for (int k = 0; k < nt; ++k) ks.emplace_back(idx(i, j, k), idx(i, j, k), cond);
    }
    if (i == nr - 1 && mesh.dirichletOuter) {
      double rf = mesh.rOuter;
      double cond = w.wphi(rf) * w.wtheta(rf) / w.wr(rf) * dp * dt / (0.5 * dr);
      for (int j = 0; j < np; ++j)
        for (int k = 0; k < nt; ++k) ks.emplace_back(idx(i, j, k), idx(i, j, k), cond);
    }
  }
  DiscreteOperator op;
  op.n = n;
  op.hasDirichlet = mesh.dirichletInner || mesh.dirichletOuter;
  op.stiffness.resize(n, n);
  op.stiffness.setFromTriplets(ks.begin(), ks.end());
  op.mass.resize(n, n);
  op.mass.setFromTriplets(ms.begin(), ms.end());
  return op;
}

// Discrete volume under a weighting (trace of the mass matrix).
inline double meshVolume(const DiscreteOperator& op) {
  return Eigen::VectorXd(op.mass.diagonal()).sum();
}

namespace detail {

inline void deflateConstants(const DiscreteOperator& op, Eigen::VectorXd& x) {
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(op.n);
  double mTot = ones.dot(op.mass * ones);
  x -= ones * (ones.dot(op.mass * x) / mTot);
}

// M-orthonormalize x against previously found eigenvectors.
inline void deflateAgainst(const DiscreteOperator& op, const std::vector<Eigen::VectorXd>& vs,
                           Eigen::VectorXd& x) {
  for (const auto& v : vs) x -= v * (v.dot(op.mass * x));
}

}  // namespace detail

// Lowest nEigs generalized eigenpairs of (K, M) via shift-regularized inverse
// iteration with conjugate-gradient inner solves and deflation; constants are
// projected out in the closed (no-Dirichlet) case.
inline std::vector<std::pair<double, Eigen::VectorXd>> lowestEigenpairs(
    const DiscreteOperator& op, int nEigs, double relTol = 1e-8, int maxIters = 400,
    unsigned seed = 1234) {
  double massScale = meshVolume(op) / op.n;
  double shift = op.hasDirichlet ? 0.0 : 1e-3;
  Eigen::SparseMatrix<double> A = op.stiffness + shift * op.mass;

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(1e-12);
  cg.setMaxIterations(4000);
  cg.compute(A);
  if (cg.info() != Eigen::Success) throw std::runtime_error("lowestEigenpairs: factor failed");

  Rng rng(seed);
  std::vector<std::pair<double, Eigen::VectorXd>> out;
  std::vector<Eigen::VectorXd> found;
  (void)massScale;
  for (int e = 0; e < nEigs; ++e) {
    Eigen::VectorXd x(op.n);
    for (int i = 0; i < op.n; ++i) x[i] = rng.gaussian();
    if (!op.hasDirichlet) detail::deflateConstants(op, x);
    detail::deflateAgainst(op, found, x);
    x /= std::sqrt(x.dot(op.mass * x));
    double lam = 0.0, lamPrev = 1e300;
    for (int it = 0; it < maxIters; ++it) {
      Eigen::VectorXd y = cg.solveWithGuess(op.mass * x, x);
      if (!op.hasDirichlet) detail::deflateConstants(op, y);
      detail::deflateAgainst(op, found, y);
      y /= std::sqrt(y.dot(op.mass * y));
      lam = y.dot(op.stiffness * y);
      x = y;
      if (std::abs(lam - lamPrev) <= relTol * std::abs(lam)) break;
      lamPrev = lam;
    }
    found.push_back(x);
    out.emplace_back(lam, x);
  }
  return out;
}

inline double firstEigenvalue(const DiscreteOperator& op, double relTol = 1e-8) {
  return lowestEigenpairs(op, 1, relTol).front().first;
}

struct EigenComparison {
  double lambdaPrime = 0.0;   // singular weighting
  double lambdaSmooth = 0.0;  // smoothed weighting
  double c = 1.0;             // dilatation constant (= m)
  bool pass = false;          // lambdaPrime >= lambdaSmooth / c^8
};

inline EigenComparison eigenvalueComparison(const BranchedMesh& mesh) {
  EigenComparison cmp;
  cmp.c = mesh.m;
  cmp.lambdaPrime = firstEigenvalue(assembleOperator(mesh, mesh.gPrime));
  cmp.lambdaSmooth = firstEigenvalue(assembleOperator(mesh, mesh.gSmooth));
  cmp.pass = cmp.lambdaPrime >= cmp.lambdaSmooth / std::pow(cmp.c, 8.0);
  return cmp;
}

// Worst ||u||_2 / ||du||_2 under the singular weighting over random mean-zero
// trials, with the bound c^4 / sqrt(lambda_1(smooth)).
struct PoincareResult {
  double worstRatio = 0.0;
  double bound = 0.0;
  bool pass = false;
};

inline PoincareResult poincareCheck(const BranchedMesh& mesh, int trials, unsigned seed = 7) {
  DiscreteOperator opP = assembleOperator(mesh, mesh.gPrime);
  DiscreteOperator opS = assembleOperator(mesh, mesh.gSmooth);
  double lamS = firstEigenvalue(opS);
  PoincareResult res;
  res.bound = std::pow(double(mesh.m), 4.0) / std::sqrt(lamS);
  Rng rng(seed);
  for (int tr = 0; tr < trials; ++tr) {
    Eigen::VectorXd u(opP.n);
    for (int i = 0; i < opP.n; ++i) u[i] = rng.gaussian();
    if (!opP.hasDirichlet) detail::deflateConstants(opP, u);
    double num = std::sqrt(u.dot(opP.mass * u));
    double den = std::sqrt(u.dot(opP.stiffness * u));
    if (den <= 0.0) continue;
    res.worstRatio = std::max(res.worstRatio, num / den);
  }
  res.pass = res.worstRatio <= res.bound;
  return res;
}

// ---------------------------------------------------------------------------
// Reference oracles
// ---------------------------------------------------------------------------

// Flat unit 3-torus (periodic in all directions): lambda_1 = 4 pi^2.
inline DiscreteOperator flatTorusOperator(int n) {
  BranchedMesh mesh;
  mesh.rInner = 0.0;
  mesh.rOuter = 1.0;
  mesh.nr = n;
  mesh.nphi = n;
  mesh.ntheta = n;
  mesh.phiPeriod = 1.0;
  mesh.thetaPeriod = 1.0;
  mesh.dirichletInner = mesh.dirichletOuter = false;
  mesh.periodicR = true;
  MeshWeights flat{[](double) { return 1.0; }, [](double) { return 1.0; },
                   [](double) { return 1.0; }};
  return assembleOperator(mesh, flat);
}

// 1-D Dirichlet interval [0, pi] (angular directions collapsed): lambda_1 = 1.
inline DiscreteOperator dirichletIntervalOperator(int n) {
  BranchedMesh mesh;
  mesh.rInner = 0.0;
  mesh.rOuter = std::numbers::pi;
  mesh.nr = n;
  mesh.nphi = 4;
  mesh.ntheta = 4;
  mesh.phiPeriod = 1.0;
  mesh.thetaPeriod = 1.0;
  mesh.dirichletInner = mesh.dirichletOuter = true;
  MeshWeights flat{[](double) { return 1.0; }, [](double) { return 1.0; },
                   [](double) { return 1.0; }};
  return assembleOperator(mesh, flat);
}

// ---------------------------------------------------------------------------
// Exploratory probe of the embedding constant on the glued tube
// ---------------------------------------------------------------------------

struct SobolevProbe {
  double t = 0.0;
  double estimate = 0.0;      // best ||v||_{L6} / ||dv||_{L2} found
  double lambda1 = 0.0;
  bool converged = true;
};

// Mesh of the glued tube metric diag(g11(r1), g22(r1), 1) in (r1, theta1,
// u3), theta1 of period 2 pi m upstairs, u3 of period l; closed in the
// angular directions, walls in r1.  The L6/L2 ratio is maximized over the
// span of the lowest nSpan eigenfunctions by random multi-start coordinate
// ascent (the quantity is scale-invariant, so the sphere in coefficient
// space is searched).
inline SobolevProbe sobolevConstantProbe(double t, const ModelParams& prm, int nr = 24,
                                         int nphi = 12, int ntheta = 6, int nSpan = 20,
                                         unsigned seed = 99) {
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0, false);
  BranchedMesh mesh;
  mesh.m = prm.m;
  mesh.l = prm.l;
  mesh.rInner = t * prm.R0prime;
  mesh.rOuter = prm.R0;
  mesh.nr = nr;
  mesh.nphi = nphi;
  mesh.ntheta = ntheta;
  mesh.phiPeriod = 2.0 * std::numbers::pi * prm.m;
  mesh.thetaPeriod = prm.l;
  mesh.dirichletInner = false;  // zero-flux core wall
  mesh.dirichletOuter = true;

  // Metric weights from the induced tube metric; diagonal in this chart.
  auto g11 = [&](double r) {
    MetricSample ms = inducedMetric(std::max(r, mesh.rInner), t, prm, cut);
    return std::sqrt(ms.g[0][0]);
  };
  auto g22 = [&](double r) {
    MetricSample ms = inducedMetric(std::max(r, mesh.rInner), t, prm, cut);
    return std::sqrt(ms.g[1][1]);
  };
  MeshWeights tube{g11, g22, [](double) { return 1.0; }};
  DiscreteOperator op = assembleOperator(mesh, tube);

  auto pairs = lowestEigenpairs(op, nSpan, 1e-6, 200, seed);
  SobolevProbe probe;
  probe.t = t;
  probe.lambda1 = pairs.front().first;

  Eigen::VectorXd vol = op.mass.diagonal();
  auto ratio = [&](const Eigen::VectorXd& coeff) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(op.n);
    for (int i = 0; i < nSpan; ++i) v += coeff[i] * pairs[std::size_t(i)].second;
    double l6 = 0.0;
    for (int i = 0; i < op.n; ++i) l6 += std::pow(std::abs(v[i]), 6.0) * vol[i];
    l6 = std::pow(l6, 1.0 / 6.0);
    double dv = std::sqrt(v.dot(op.stiffness * v));
    return dv > 0.0 ? l6 / dv : 0.0;
  };

  Rng rng(seed + 1);
  double best = 0.0;
  for (int start = 0; start < 5; ++start) {
    Eigen::VectorXd c(nSpan);
    for (int i = 0; i < nSpan; ++i) c[i] = rng.gaussian();
    c.normalize();
    double cur = ratio(c);
    double step = 0.5;
    for (int it = 0; it < 200 && step > 1e-4; ++it) {
      bool improved = false;
      for (int i = 0; i < nSpan; ++i) {
        for (double s : {step, -step}) {
          Eigen::VectorXd c2 = c;
          c2[i] += s;
          c2.normalize();
          double r2 = ratio(c2);
          if (r2 > cur) {
            c = c2;
            cur = r2;
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, cur);
  }
  probe.estimate = best;
  return probe;
}

}  // namespace sllab
