#include <catch2/catch_amalgamated.hpp>

#include "sllab/flat_model.hpp"
#include "sllab/rng.hpp"

using namespace sllab;

namespace {

AmbientVector randomVector(Rng& rng) {
  return {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
          rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
}

DomainPoint randomPoint(Rng& rng, double l) {
  double rho = rng.uniform(0.05, 2.0), phi = rng.uniform(-M_PI, M_PI);
  return {rho * std::cos(phi), rho * std::sin(phi), rng.uniform(0.0, l)};
}

}  // namespace

TEST_CASE("rotated-coordinate form identities hold at random tangent pairs") {
  Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    AmbientVector v = randomVector(rng), w = randomVector(rng);
    worst = std::max(worst, rotationIdentityResidual(v, w));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("Kaehler form is antisymmetric and nondegenerate on coordinate pairs") {
  AmbientVector e1{1, 0, 0, 0, 0, 0}, f1{0, 0, 0, 1, 0, 0};
  CHECK(omegaPrime(e1, f1) == Catch::Approx(1.0));
  CHECK(omegaPrime(f1, e1) == Catch::Approx(-1.0));
  CHECK(omegaPrime(e1, e1) == 0.0);
}

TEST_CASE("holomorphic volume form evaluates to 1 on the holomorphic frame") {
  AmbientVector a{1, 0, 0, 0, 0, 0}, b{0, 1, 0, 0, 0, 0}, c{0, 0, 1, 0, 0, 0};
  CHECK(std::abs(bigOmegaPrime(a, b, c) - Complex(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("deformation family is calibrated for every branching degree and amplitude") {
  Rng rng(12);
  for (int m : {2, 3, 4})
    for (double a : {0.25, 1.0, 4.0})
      for (double t : {1.0, 0.5, 0.1}) {
        ModelParams prm = ModelParams::defaults();
        prm.m = m;
        prm.a = a;
        for (int i = 0; i < 30; ++i) {
          SlResidual r = slResidual(randomPoint(rng, prm.l), t, prm);
          CHECK(r.omega <= 1e-10);
          CHECK(r.imOmega <= 1e-10);
        }
      }
}

TEST_CASE("amplitude route equals the partial-scaling route") {
  Rng rng(13);
  for (int m : {2, 3, 5}) {
    ModelParams prm = ModelParams::defaults();
    prm.m = m;
    prm.a = 0.7;
    for (int i = 0; i < 50; ++i) {
      DomainPoint x = randomPoint(rng, prm.l);
      double t = rng.uniform(0.05, 0.95);
      AmbientPoint p = psiAScaled(x, t, prm), q = psiAScaledViaScaling(x, t, prm);
      CHECK(std::abs(p.u1 - q.u1) <= 1e-12);
      CHECK(std::abs(p.u2 - q.u2) <= 1e-12);
      CHECK(std::abs(p.u3 - q.u3) <= 1e-12);
      CHECK(std::abs(p.v1 - q.v1) <= 1e-12);
      CHECK(std::abs(p.v2 - q.v2) <= 1e-12);
      CHECK(std::abs(p.v3 - q.v3) <= 1e-12);
    }
  }
}

TEST_CASE("potential gradient matches finite differences") {
  Rng rng(14);
  ModelParams prm = ModelParams::defaults();
  prm.m = 3;
  prm.a = 2.0;
  double h = 1e-6;
  for (int i = 0; i < 20; ++i) {
    DomainPoint x = randomPoint(rng, prm.l);
    auto g = potentialGradient(x, prm, prm.a);
    DomainPoint xp = x, xm = x;
    xp.x1 += h;
    xm.x1 -= h;
    double fd1 = (potentialH(xp, prm) - potentialH(xm, prm)) / (2 * h);
    xp = xm = x;
    xp.x2 += h;
    xm.x2 -= h;
    double fd2 = (potentialH(xp, prm) - potentialH(xm, prm)) / (2 * h);
    CHECK(std::abs(g[0] - fd1) <= 1e-5);
    CHECK(std::abs(g[1] - fd2) <= 1e-5);
    CHECK(g[2] == 0.0);
  }
}

TEST_CASE("potential graph maps into the model image variety") {
  Rng rng(15);
  for (int m : {2, 3, 4})
    for (double a : {0.25, 1.0, 4.0}) {
      ModelParams prm = ModelParams::defaults();
      prm.m = m;
      prm.a = a;
      for (int i = 0; i < 30; ++i)
        CHECK(graphMatchesImage(randomPoint(rng, prm.l), prm) <= 1e-10);
    }
}

TEST_CASE("circle coordinate is normalized into [0, l)") {
  AmbientPoint p;
  p.u3 = -0.25;
  p.normalizeCircle(2.0);
  CHECK(p.u3 == Catch::Approx(1.75));
}
