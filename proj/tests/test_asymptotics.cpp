#include <catch2/catch_amalgamated.hpp>

#include "sllab/asymptotics.hpp"

using namespace sllab;

namespace {

ModelParams shortGrid(int m, double c1, double c2) {
  ModelParams prm = ModelParams::defaults();
  prm.m = m;
  prm.c1 = c1;
  prm.c2 = c2;
  prm.tGrid = ModelParams::dyadicGrid(4, 12);
  return prm;
}

}  // namespace

TEST_CASE("inner-tube norm integrals match a closed-form cross-check") {
  // With eps = t^{1-m} r2^m + r2 and the displayed density, the L^1 integral
  // over [0, r2Max] is elementary; compare against direct evaluation.
  ModelParams prm = shortGrid(2, 0.5, 0.3);
  double t = 1.0 / 64.0;
  PModelField f{t, prm};
  double hi = f.r2Max();
  QuadResult direct = integrate(
      [&](double r2) { return f.eps(r2) * f.density(r2); }, 1e-12 * hi, hi, 1e-11);
  double viaNorm = integrateNormP(FieldKind::Eps, 1.0, t, prm);
  CHECK(viaNorm == Catch::Approx(direct.value).epsilon(1e-6));
}

TEST_CASE("inner-tube exponent fits land on the closed-form orders") {
  for (int m : {2, 3}) {
    ModelParams prm = shortGrid(m, 0.5, 0.3);
    VerifyRecord r = verifyQuantity("epsL1_P", prm);
    CHECK(r.kind == BoundKind::EqualityOrder);
    CHECK(r.predicted == Catch::Approx(1.5));
    CHECK(std::abs(r.fitted - r.predicted) <= prm.fitTol);
    CHECK(r.pass);
  }
}

TEST_CASE("annulus norms stay below their predicted power") {
  ModelParams prm = shortGrid(3, 0.8, 0.4);
  for (const char* q : {"epsL65_Q", "epsL1_Q", "depsL6_Q"}) {
    VerifyRecord r = verifyQuantity(q, prm);
    CHECK(std::isfinite(r.maxRatio));
    CHECK(r.ratioGrowth <= 1.5);
    CHECK(r.pass);
  }
}

TEST_CASE("sup of the model fields tracks the closed-form bounds") {
  ModelParams prm = shortGrid(2, 0.5, 0.3);
  SupRatioCurve s = supRatioCurve(prm);
  CHECK(s.pass);
  for (double v : s.ratioP) CHECK(std::isfinite(v));
  for (double v : s.ratioQ) CHECK(std::isfinite(v));
}

TEST_CASE("partition profile is a smooth step with vanishing end derivatives") {
  double a = 0.4, b = 0.6;
  CHECK(smoothstep7(0.1, a, b) == 1.0);
  CHECK(smoothstep7(0.9, a, b) == 0.0);
  CHECK(smoothstep7(a, a, b, 1) == 0.0);
  CHECK(std::abs(smoothstep7(a + 1e-4, a, b, 1)) <= 1e-6);
  CHECK(std::abs(smoothstep7(b - 1e-4, a, b, 1)) <= 1e-6);
  double h = 1e-6, mid = 0.5 * (a + b);
  double fd = (smoothstep7(mid + h, a, b) - smoothstep7(mid - h, a, b)) / (2 * h);
  CHECK(fd == Catch::Approx(smoothstep7(mid, a, b, 1)).margin(1e-6));
}

TEST_CASE("partition norm curves fit their closed-form rates") {
  ModelParams prm = shortGrid(2, 0.5, 0.3);
  // The 1 - F fit converges slowly; use the full dyadic range for this case.
  prm.tGrid = ModelParams::dyadicGrid(4, 16);
  prm.partA = 0.4;
  prm.partB = 0.6;
  prm.eta2 = 0.2;
  prm.eta1 = 0.1;
  PartitionCurves pc = sobolevPartitionCurves(prm);
  CHECK(std::abs(pc.oneMinusF.fit.exponent - pc.predictedOneMinusF) <= 0.1);
  CHECK(pc.dF.fit.exponent >= -prm.partB / 3.0 - 0.05);
  CHECK(pc.dF.fit.exponent <= -(prm.partB - 0.05) / 3.0 + 0.05);
}

TEST_CASE("scaling report: rescaled sups stable, decay rate on target") {
  ModelParams prm = shortGrid(2, 0.5, 0.3);
  prm.tGrid = ModelParams::dyadicGrid(4, 10);
  CriteriaReport cr = criteriaReport(prm);
  for (int k = 0; k < 4; ++k) CHECK(cr.betaVariation[k] <= 0.20);
  CHECK(cr.curvVariation <= 0.20);
  CHECK(cr.proxyMin > 0.0);
  CHECK(std::abs(cr.decaySlopeFitted - cr.decaySlopePredicted) <= 0.1);
}
