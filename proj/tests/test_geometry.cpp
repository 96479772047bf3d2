#include <catch2/catch_amalgamated.hpp>

#include "sllab/geometry.hpp"

using namespace sllab;

namespace {

ModelParams testParams(int m = 2) {
  ModelParams prm = ModelParams::defaults();
  prm.m = m;
  prm.c1 = 1.2;
  prm.c2 = 0.2;
  return prm;
}

}  // namespace

TEST_CASE("induced metric matches a finite-difference Gram oracle") {
  ModelParams prm = testParams(3);
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  for (double f : {0.4, 0.9, 1.4, 2.5}) {
    double r1 = f * prm.b1(t);
    MetricSample s = inducedMetric(r1, t, prm, cut);
    auto gram = gramFromImmersionFD(r1, 0.7, t, prm, cut);
    CHECK(s.g[0][0] == Catch::Approx(gram[0][0]).epsilon(1e-5));
    CHECK(s.g[1][1] == Catch::Approx(gram[1][1]).epsilon(1e-5));
    CHECK(std::abs(gram[0][1]) <= 1e-6 * std::max(1.0, gram[1][1]));
    CHECK(s.g[2][2] == 1.0);
  }
}

TEST_CASE("metric reduces to the flat cone where the profile vanishes") {
  ModelParams prm = testParams(2);
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  double r1 = 2.0 * prm.b2(t);
  MetricSample s = curvature(r1, t, prm, cut);
  CHECK(s.g[0][0] == Catch::Approx(1.0));
  CHECK(s.g[1][1] == Catch::Approx(r1 * r1));
  CHECK(std::abs(s.riemannNorm) <= 1e-10);
}

TEST_CASE("curvature respects the product structure and the 2|K| identity") {
  ModelParams prm = testParams(2);
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  for (double f : {0.5, 1.0, 2.0}) {
    double r1 = prm.b1(t) + f * 0.25 * (prm.b2(t) - prm.b1(t));
    MetricSample s = curvature(r1, t, prm, cut);
    // All curvature lives in the (r1, theta1) surface block: the norm of the
    // tensor is exactly twice the absolute sectional curvature there.
    CHECK(s.riemannNorm == Catch::Approx(2.0 * std::abs(s.sectional)).margin(1e-9));
    CHECK(s.u3ComponentResidual <= 1e-10);
  }
}

TEST_CASE("surface-block sectional curvature matches a closed-form oracle") {
  // For g = dr^2 + f(r)^2 dθ^2 with f = sqrt(r^2 + w^2/m^2) and w = amp r^{1/m}
  // (inner region, cutoff identically 1, so g11 = 1 + w'^2 is not 1; use the
  // exterior flat region and the annulus FD comparison instead).
  ModelParams prm = testParams(2);
  double t = 1.0 / 1024.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  double h = 1e-5;
  for (double f : {0.3, 0.6, 0.9}) {
    double r1 = prm.b1(t) + f * 0.3 * (prm.b2(t) - prm.b1(t));
    auto K = [&](double r) { return curvature(r, t, prm, cut).sectional; };
    // Gauss curvature of diag(E(r), G(r)):
    //   K = -(1/(2 sqrt(EG))) d/dr ( G'(r) / sqrt(EG) ).
    auto EG = [&](double r) {
      auto dj = metricDiagonalJets(r, t, prm, cut);
      return std::array<double, 3>{dj[0].v, dj[1].v, dj[1].g[0]};
    };
    auto a = EG(r1 - h), b = EG(r1 + h), c = EG(r1);
    double term = (b[2] / std::sqrt(b[0] * b[1]) - a[2] / std::sqrt(a[0] * a[1])) / (2 * h);
    double Kref = -term / (2.0 * std::sqrt(c[0] * c[1]));
    CHECK(K(r1) == Catch::Approx(Kref).margin(1e-2 * (1.0 + std::abs(Kref))));
  }
}

TEST_CASE("phase vanishes on the inner tube and switches on across the annulus") {
  ModelParams prm = testParams(2);
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  for (double f : {0.3, 0.7, 1.0})
    for (double phi : {0.0, 0.4, 2.0}) {
      double rho = std::pow(f * prm.b1(t), 1.0 / prm.m);
      PhaseSample p = phase(rho, phi, t, prm, cut);
      CHECK(std::abs(p.eps) <= 1e-9);
    }
  double supAnnulus = 0.0;
  for (double f : {0.2, 0.5, 0.8}) {
    double r1 = prm.b1(t) + f * (prm.b2(t) - prm.b1(t));
    supAnnulus = std::max(supAnnulus,
                          std::abs(phase(std::pow(r1, 1.0 / prm.m), 0.3, t, prm, cut).eps));
  }
  CHECK(supAnnulus > 1e-9);
}

TEST_CASE("conjugate-radius proxy and fiber-radius report are finite and positive") {
  ModelParams prm = testParams(2);
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1eta(t), prm.b2eta(t), prm.R0, false);
  double proxy = conjugateRadiusProxy(t, prm, cut);
  CHECK(proxy > 0.0);
  FiberRadiusReport fr = fiberRadiusCheck(t, prm, cut);
  CHECK(fr.minSlopeOverT > 0.0);
  CHECK(fr.summand1 > 0.0);
  CHECK(fr.summand2 > 0.0);
  CHECK(fr.summand3 > 0.0);
}
