#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

namespace sllab {

// Hamiltonian f(q, p) = 1/2 sum a_ij(q) p_i p_j on T*R^3 with a field of
// symmetric matrices depending affinely on q: A(q) = A0 + sum_k q_k A1[k].
struct HessianField {
  Eigen::Matrix3d A0 = Eigen::Matrix3d::Identity();
  std::array<Eigen::Matrix3d, 3> A1 = {Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                       Eigen::Matrix3d::Zero()};

  Eigen::Matrix3d at(const Eigen::Vector3d& q) const {
    Eigen::Matrix3d A = A0;
    for (int k = 0; k < 3; ++k) A += q[k] * A1[k];
    return A;
  }
  bool constant() const {
    for (int k = 0; k < 3; ++k)
      if (A1[k].norm() != 0.0) return false;
    return true;
  }
};

struct FlowResult {
  Eigen::Matrix<double, 6, 1> y;      // (q, p) endpoint
  Eigen::Matrix<double, 6, 6> jac;    // d(endpoint)/d(seed), from the variational equations
};

// RK4 integration of the flow together with its variational equations; for
// a constant field the vector field is nilpotent and RK4 is exact.
inline FlowResult hamiltonianFlow(const HessianField& field, const Eigen::Matrix<double, 6, 1>& y0,
                                  double time, int nSteps = 256) {
  using V6 = Eigen::Matrix<double, 6, 1>;
  using M6 = Eigen::Matrix<double, 6, 6>;

  auto rhs = [&](const V6& y, const M6& J, V6& dy, M6& dJ) {
    Eigen::Vector3d q = y.head<3>(), p = y.tail<3>();
    Eigen::Matrix3d A = field.at(q);
    dy.head<3>() = A * p;
    Eigen::Vector3d dp;
    for (int k = 0; k < 3; ++k) dp[k] = -0.5 * p.dot(field.A1[k] * p);
    dy.tail<3>() = dp;

    M6 DX = M6::Zero();
    DX.block<3, 3>(0, 3) = A;
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d col = field.A1[k] * p;
      DX.block<3, 1>(0, k) = col;            // d qdot / d q_k
      DX.block<1, 3>(3 + k, 3) = -col.transpose();  // d pdot_k / d p
    }
    dJ = DX * J;
  };

  V6 y = y0;
  M6 J = M6::Identity();
  double h = time / nSteps;
  V6 k1y, k2y, k3y, k4y;
  M6 k1J, k2J, k3J, k4J;
  for (int s = 0; s < nSteps; ++s) {
    rhs(y, J, k1y, k1J);
    rhs(y + 0.5 * h * k1y, J + 0.5 * h * k1J, k2y, k2J);
    rhs(y + 0.5 * h * k2y, J + 0.5 * h * k2J, k3y, k3J);
    rhs(y + h * k3y, J + h * k3J, k4y, k4J);
    y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    J += (h / 6.0) * (k1J + 2.0 * k2J + 2.0 * k3J + k4J);
  }
  return {y, J};
}

// Max-abs entry of J^T Omega J - Omega (canonical symplectic matrix).
inline double symplecticityDefect(const Eigen::Matrix<double, 6, 6>& J) {
  Eigen::Matrix<double, 6, 6> Om = Eigen::Matrix<double, 6, 6>::Zero();
  Om.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity();
  Om.block<3, 3>(3, 0) = -Eigen::Matrix3d::Identity();
  return ((J.transpose() * Om * J) - Om).cwiseAbs().maxCoeff();
}

// Largest principal angle (radians) between the pushforward of the vertical
// space at a zero-section point and the graph subspace {(A xi, xi)}.
inline double tangencyDefect(const HessianField& field, const Eigen::Vector3d& x, double time,
                             int nSteps = 256) {
  Eigen::Matrix<double, 6, 1> y0;
  y0.head<3>() = x;
  y0.tail<3>().setZero();
  FlowResult fr = hamiltonianFlow(field, y0, time, nSteps);

  Eigen::Matrix<double, 6, 3> pushed, target;
  Eigen::Matrix3d A = time * field.at(x);
  for (int k = 0; k < 3; ++k) {
    Eigen::Matrix<double, 6, 1> vert = Eigen::Matrix<double, 6, 1>::Zero();
    vert[3 + k] = 1.0;
    pushed.col(k) = fr.jac * vert;
    target.col(k) << A.col(k), Eigen::Vector3d::Unit(k);
  }
  auto orth = [](const Eigen::Matrix<double, 6, 3>& Mx) {
    Eigen::HouseholderQR<Eigen::Matrix<double, 6, 3>> qr(Mx);
    return Eigen::Matrix<double, 6, 3>(
        qr.householderQ() * Eigen::Matrix<double, 6, 3>::Identity());
  };
  Eigen::Matrix<double, 6, 3> Qp = orth(pushed), Qt = orth(target);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(Qp.transpose() * Qt);
  double smin = std::min(1.0, svd.singularValues().minCoeff());
  return std::acos(smin);
}

}  // namespace sllab
