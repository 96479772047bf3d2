#include <catch2/catch_amalgamated.hpp>

#include "sllab/hamiltonian.hpp"
#include "sllab/rng.hpp"

using namespace sllab;

namespace {

HessianField constantField() {
  HessianField f;
  f.A0 << 1.2, 0.1, 0.0, 0.1, 0.8, -0.05, 0.0, -0.05, 1.0;
  return f;
}

HessianField linearField() {
  HessianField f = constantField();
  f.A1[0] << 0.2, 0.05, 0.0, 0.05, -0.1, 0.0, 0.0, 0.0, 0.1;
  f.A1[2] << 0.0, 0.1, 0.0, 0.1, 0.05, -0.1, 0.0, -0.1, 0.0;
  return f;
}

}  // namespace

TEST_CASE("constant-Hessian flow equals the linear closed form") {
  HessianField f = constantField();
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Eigen::Matrix<double, 6, 1> y0;
    for (int k = 0; k < 6; ++k) y0[k] = rng.uniform(-1, 1);
    double time = rng.uniform(0.1, 1.5);
    FlowResult fr = hamiltonianFlow(f, y0, time);
    Eigen::Matrix<double, 6, 1> exact = y0;
    exact.head<3>() += time * (f.A0 * y0.tail<3>());
    CHECK((fr.y - exact).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("flow Jacobian is symplectic") {
  Rng rng(32);
  for (const HessianField& f : {constantField(), linearField()})
    for (int i = 0; i < 10; ++i) {
      Eigen::Matrix<double, 6, 1> y0;
      for (int k = 0; k < 6; ++k) y0[k] = rng.uniform(-1, 1);
      FlowResult fr = hamiltonianFlow(f, y0, rng.uniform(0.2, 1.0));
      CHECK(symplecticityDefect(fr.jac) <= 1e-8);
    }
}

TEST_CASE("energy is conserved along the flow") {
  HessianField f = linearField();
  Rng rng(33);
  auto energy = [&](const Eigen::Matrix<double, 6, 1>& y) {
    Eigen::Vector3d q = y.head<3>(), p = y.tail<3>();
    return 0.5 * p.dot(f.at(q) * p);
  };
  for (int i = 0; i < 10; ++i) {
    Eigen::Matrix<double, 6, 1> y0;
    for (int k = 0; k < 6; ++k) y0[k] = rng.uniform(-0.5, 0.5);
    FlowResult fr = hamiltonianFlow(f, y0, 1.0);
    CHECK(std::abs(energy(fr.y) - energy(y0)) <= 1e-9);
  }
}

TEST_CASE("pushed vertical space matches the Hessian graph at the zero section") {
  Rng rng(34);
  for (const HessianField& f : {constantField(), linearField()})
    for (int i = 0; i < 10; ++i) {
      Eigen::Vector3d x(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      CHECK(tangencyDefect(f, x, rng.uniform(0.2, 1.0)) <= 1e-6);
    }
}

TEST_CASE("flow composes: two half-time steps equal one full step") {
  HessianField f = linearField();
  Eigen::Matrix<double, 6, 1> y0;
  y0 << 0.3, -0.2, 0.5, 0.1, 0.4, -0.3;
  FlowResult full = hamiltonianFlow(f, y0, 0.8, 512);
  FlowResult half = hamiltonianFlow(f, y0, 0.4, 256);
  FlowResult rest = hamiltonianFlow(f, half.y, 0.4, 256);
  CHECK((rest.y - full.y).cwiseAbs().maxCoeff() <= 1e-10);
}
