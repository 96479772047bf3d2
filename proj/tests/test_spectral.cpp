#include <catch2/catch_amalgamated.hpp>

#include "sllab/spectral.hpp"

using namespace sllab;

TEST_CASE("Dirichlet interval eigenvalue converges at second order") {
  double e32 = std::abs(firstEigenvalue(dirichletIntervalOperator(32)) - 1.0);
  double e64 = std::abs(firstEigenvalue(dirichletIntervalOperator(64)) - 1.0);
  CHECK(e64 <= 0.005);
  double order = std::log2(e32 / e64);
  CHECK(order == Catch::Approx(2.0).margin(0.3));
}

TEST_CASE("flat torus eigenvalue approaches 4 pi^2") {
  double want = 4.0 * M_PI * M_PI;
  double lam = firstEigenvalue(flatTorusOperator(16));
  CHECK(std::abs(lam - want) / want <= 0.05);
}

TEST_CASE("dilatation bound of the branched mesh equals the branching degree") {
  BranchedMesh mesh = buildBranchedMesh(3, 1.0, 0.5, 12, 12, 6);
  CHECK(dilatationBound(mesh) == Catch::Approx(3.0));
}

TEST_CASE("singular weighting dominates the smoothed one after rescaling") {
  for (int m : {2, 3}) {
    BranchedMesh mesh = buildBranchedMesh(m, 1.0, 0.5, 12, 12, 6);
    EigenComparison ec = eigenvalueComparison(mesh);
    CHECK(ec.c == Catch::Approx(double(m)));
    CHECK(ec.lambdaPrime > 0.0);
    CHECK(ec.lambdaSmooth > 0.0);
    CHECK(ec.pass);
  }
}

TEST_CASE("random mean-zero fields satisfy the closed-form ratio bound") {
  BranchedMesh mesh = buildBranchedMesh(2, 1.0, 0.5, 12, 12, 6);
  PoincareResult pr = poincareCheck(mesh, 25, 7);
  CHECK(pr.bound > 0.0);
  CHECK(pr.worstRatio <= pr.bound);
  CHECK(pr.pass);
}

TEST_CASE("first eigenvalue decreases as the exhaustion grows") {
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 3; ++j) {
    BranchedMesh mesh = buildBranchedMesh(2, 1.0, 0.5, 12, 12, 6, j);
    double lam = firstEigenvalue(assembleOperator(mesh, mesh.gPrime));
    CHECK(lam < prev * (1.0 + 1e-9));
    prev = lam;
  }
}

TEST_CASE("eigenpair extraction is deterministic for a fixed seed") {
  DiscreteOperator op = dirichletIntervalOperator(48);
  double a = firstEigenvalue(op);
  double b = firstEigenvalue(op);
  CHECK(a == b);
}
