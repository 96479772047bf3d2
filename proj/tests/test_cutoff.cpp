#include <catch2/catch_amalgamated.hpp>

#include "sllab/cutoff.hpp"

using namespace sllab;

TEST_CASE("cutoff is exactly constant outside the transition annulus") {
  SmoothCutoff c = buildCutoff(0.01, 0.01, 0.3, 1.0);
  for (double r : {1e-6, 0.005, 0.01}) {
    CHECK(c.eval(r, 0) == 1.0);
    for (int k = 1; k <= 3; ++k) CHECK(c.eval(r, k) == 0.0);
  }
  for (double r : {0.3, 0.5, 0.99}) {
    CHECK(c.eval(r, 0) == 0.0);
    for (int k = 1; k <= 3; ++k) CHECK(c.eval(r, k) == 0.0);
  }
}

TEST_CASE("cutoff joins its constant tails continuously to third order") {
  SmoothCutoff c = buildCutoff(0.01, 0.01, 0.3, 1.0);
  double d = 1e-9;
  CHECK(std::abs(c.eval(c.b1 + d, 0) - 1.0) <= 1e-7);
  CHECK(std::abs(c.eval(c.b2 - d, 0)) <= 1e-7);
  for (int k = 1; k <= 3; ++k) {
    CHECK(std::abs(c.eval(c.b1 + d, k)) * std::pow(c.b2, k) <= 1e-4);
    CHECK(std::abs(c.eval(c.b2 - d, k)) * std::pow(c.b2, k) <= 1e-4);
  }
}

TEST_CASE("cutoff decreases from 1 to 0 across the annulus") {
  SmoothCutoff c = buildCutoff(0.01, 0.02, 0.4, 1.0);
  double prev = 1.0 + 1e-12;
  for (int i = 0; i <= 200; ++i) {
    double r = c.b1 + (c.b2 - c.b1) * i / 200.0;
    double v = c.eval(r, 0);
    CHECK(v <= prev + 1e-9);
    CHECK(v >= -1e-9);
    CHECK(v <= 1.0 + 1e-9);
    prev = v;
  }
}

TEST_CASE("stored derivatives agree with finite differences of the cutoff") {
  SmoothCutoff c = buildCutoff(0.01, 0.02, 0.4, 1.0);
  double h = 1e-6;
  for (double f : {0.15, 0.35, 0.55, 0.75, 0.95}) {
    double r = c.b1 + (c.b2 - c.b1) * f;
    double fd = (c.eval(r + h, 0) - c.eval(r - h, 0)) / (2 * h);
    CHECK(std::abs(fd - c.eval(r, 1)) <= 1e-3 * (1.0 + std::abs(c.eval(r, 1))));
    double fd2 = (c.eval(r + h, 1) - c.eval(r - h, 1)) / (2 * h);
    CHECK(std::abs(fd2 - c.eval(r, 2)) <= 1e-2 * (1.0 + std::abs(c.eval(r, 2))));
  }
}

TEST_CASE("strict construction rejects narrow annuli, relaxed one accepts them") {
  CHECK_THROWS(buildCutoff(0.01, 0.05, 0.3, 1.0, true));
  CHECK_NOTHROW(buildCutoff(0.01, 0.05, 0.3, 1.0, false));
  CHECK_THROWS(buildCutoff(0.01, 0.3, 0.05, 1.0));
}

TEST_CASE("scale-invariant derivative constant is stable across the dyadic schedule") {
  // b1 = t^1.2, b2 = t^0.2: the annulus is wide on the whole schedule.
  double cMin = 1e300, cMax = 0.0;
  for (int k = 4; k <= 16; k += 2) {
    double t = std::ldexp(1.0, -k);
    SmoothCutoff c = buildCutoff(t, std::pow(t, 1.2), std::pow(t, 0.2), 1.0);
    cMin = std::min(cMin, c.C0);
    cMax = std::max(cMax, c.C0);
  }
  CHECK(cMax / cMin <= 2.0);
}
