#include <catch2/catch_amalgamated.hpp>

#include "sllab/gluing.hpp"
#include "sllab/rng.hpp"

using namespace sllab;

namespace {

ModelParams testParams() {
  ModelParams prm = ModelParams::defaults();
  prm.c1 = 1.2;
  prm.c2 = 0.2;
  return prm;
}

}  // namespace

TEST_CASE("region classification: ties go to the smaller region") {
  ModelParams prm = testParams();
  double t = 1.0 / 64.0;
  double b1 = prm.b1(t), b2 = prm.b2(t);
  CHECK(regionOfRadius(0.5 * b1, t, prm) == RegionLabel::P);
  CHECK(regionOfRadius(b1, t, prm) == RegionLabel::P);
  CHECK(regionOfRadius(0.5 * (b1 + b2), t, prm) == RegionLabel::Q);
  CHECK(regionOfRadius(b2, t, prm) == RegionLabel::Q);
  CHECK(regionOfRadius(1.5 * b2, t, prm) == RegionLabel::K);
}

TEST_CASE("glued profile equals the exact model inside and vanishes outside") {
  ModelParams prm = testParams();
  for (double t : {1.0 / 32.0, 1.0 / 1024.0}) {
    SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
    double amp = std::pow(prm.a, 1.0 / prm.m) * std::pow(t, double(prm.m - 1) / prm.m);
    for (double f : {0.1, 0.6, 1.0}) {
      double r1 = f * prm.b1(t);
      CHECK(gluedProfile(r1, t, prm, cut) ==
            Catch::Approx(amp * std::pow(r1, 1.0 / prm.m)).margin(1e-15));
    }
    for (double f : {1.0, 1.7, 3.0}) CHECK(gluedProfile(f * prm.b2(t), t, prm, cut) == 0.0);
  }
}

TEST_CASE("profile derivative matches finite differences on the annulus") {
  ModelParams prm = testParams();
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  double h = 1e-8;
  for (double f : {0.2, 0.5, 0.8}) {
    double r1 = prm.b1(t) + f * (prm.b2(t) - prm.b1(t));
    double fd = (gluedProfile(r1 + h, t, prm, cut) - gluedProfile(r1 - h, t, prm, cut)) / (2 * h);
    double ex = gluedProfileDeriv(r1, t, prm, cut);
    CHECK(std::abs(fd - ex) <= 1e-5 * (1.0 + std::abs(ex)));
  }
}

TEST_CASE("graph and radial-profile immersions agree off the annulus") {
  ModelParams prm = testParams();
  Rng rng(21);
  for (double t : {1.0 / 32.0, 1.0 / 4096.0}) {
    SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
    for (int i = 0; i < 40; ++i) {
      bool inner = (i % 2 == 0);
      double r1 = inner ? rng.uniform(0.05, 0.95) * prm.b1(t)
                        : rng.uniform(1.05 * prm.b2(t), 0.99 * prm.R0);
      double rho = std::pow(r1, 1.0 / prm.m), phi = rng.uniform(-M_PI, M_PI);
      DomainPoint x{rho * std::cos(phi), rho * std::sin(phi), rng.uniform(0.0, prm.l)};
      AmbientPoint g = gluedImmersion(x, t, prm, cut), gr = graphImmersion(x, t, prm, cut);
      CHECK(std::abs(g.v1 - gr.v1) <= 1e-12);
      CHECK(std::abs(g.v2 - gr.v2) <= 1e-12);
      CHECK(g.v3 == 0.0);
      CHECK(gr.v3 == 0.0);
    }
  }
}

TEST_CASE("angle relation of the image: m theta2 = theta1") {
  ModelParams prm = testParams();
  double t = 1.0 / 256.0;
  SmoothCutoff cut = buildCutoff(t, prm.b1(t), prm.b2(t), prm.R0);
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    double rho = std::pow(rng.uniform(0.001, 0.5 * prm.b1(t)), 1.0 / prm.m);
    double phi = rng.uniform(-M_PI / prm.m, M_PI / prm.m);
    DomainPoint x{rho * std::cos(phi), rho * std::sin(phi), 0.0};
    AmbientPoint g = gluedImmersion(x, t, prm, cut);
    double th1 = g.th1(), th2 = g.th2();
    double diff = std::remainder(prm.m * th2 - th1, 2.0 * M_PI);
    CHECK(std::abs(diff) <= 1e-9);
  }
}
