#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sllab {

struct PowerFit {
  double exponent = 0.0;   // p in value ~ C * t^p (* (-log t)^s)
  double logCoeff = 0.0;   // s, zero unless logCorrection requested
  double constant = 0.0;   // log C
  double rSquared = 0.0;
  int skippedZeros = 0;
};

// Least-squares fit of log(value) against log(t) (and optionally
// log(-log t)); exact zeros are skipped and counted.
inline PowerFit fitPowerLaw(const std::vector<double>& ts, const std::vector<double>& values,
                            bool logCorrection = false) {
  if (ts.size() != values.size()) throw std::invalid_argument("fitPowerLaw: size mismatch");
  std::vector<double> lt, lv, ll;
  PowerFit out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(values[i] > 0.0)) {
      ++out.skippedZeros;
      continue;
    }
    lt.push_back(std::log(ts[i]));
    lv.push_back(std::log(values[i]));
    ll.push_back(std::log(-std::log(ts[i])));
  }
  int n = int(lt.size());
  int cols = logCorrection ? 3 : 2;
  if (n < cols) throw std::invalid_argument("fitPowerLaw: too few positive samples");

  Eigen::MatrixXd X(n, cols);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = lt[i];
    X(i, 1) = 1.0;
    if (logCorrection) X(i, 2) = ll[i];
    y[i] = lv[i];
  }
  Eigen::VectorXd beta = X.colPivHouseholderQr().solve(y);
  out.exponent = beta[0];
  out.constant = beta[1];
  if (logCorrection) out.logCoeff = beta[2];

  double mean = y.mean();
  double ssTot = (y.array() - mean).square().sum();
  double ssRes = (y - X * beta).squaredNorm();
  out.rSquared = ssTot > 0.0 ? std::max(0.0, 1.0 - ssRes / ssTot) : 1.0;
  return out;
}

}  // namespace sllab
