#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sllab/powerfit.hpp"
#include "sllab/quadrature.hpp"

using namespace sllab;

TEST_CASE("adaptive quadrature integrates smooth functions to tolerance") {
  QuadResult q = integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
  CHECK(q.converged);
  CHECK(q.value == Catch::Approx(2.0).epsilon(1e-10));
  QuadResult g = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-12);
  CHECK(g.value == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("graded quadrature handles endpoint singularities") {
  QuadResult q = integrateGraded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(q.value == Catch::Approx(2.0).epsilon(1e-8));
  QuadResult p = integrateGraded([](double x) { return std::pow(x, -0.75); }, 0.0, 1.0, 1e-10);
  CHECK(p.value == Catch::Approx(4.0).epsilon(1e-5));
}

TEST_CASE("periodic trapezoid rule is spectrally exact on trigonometric data") {
  double v = periodicTrapezoid([](double th) { return std::cos(th) * std::cos(th); },
                               2.0 * M_PI, 32);
  CHECK(v == Catch::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("power-law fit recovers exponents from clean data") {
  std::vector<double> ts, vs;
  for (int k = 4; k <= 16; ++k) {
    double t = std::ldexp(1.0, -k);
    ts.push_back(t);
    vs.push_back(3.0 * std::pow(t, 1.75));
  }
  PowerFit f = fitPowerLaw(ts, vs);
  CHECK(f.exponent == Catch::Approx(1.75).margin(1e-10));
  CHECK(f.rSquared == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("log-corrected fit separates the power from the log factor") {
  std::vector<double> ts, vs;
  for (int k = 4; k <= 16; ++k) {
    double t = std::ldexp(1.0, -k);
    ts.push_back(t);
    vs.push_back(std::pow(t, 0.5) * (-std::log(t)));
  }
  PowerFit plain = fitPowerLaw(ts, vs, false);
  PowerFit corrected = fitPowerLaw(ts, vs, true);
  CHECK(std::abs(corrected.exponent - 0.5) < std::abs(plain.exponent - 0.5));
  CHECK(corrected.exponent == Catch::Approx(0.5).margin(0.02));
}
