#include "bandlab/schatten.hpp"

#include <cmath>
#include <stdexcept>

namespace bandlab {

namespace {

Eigen::BDCSVD<Eigen::MatrixXcd> svd_values_only(const Eigen::MatrixXcd& m) {
  return Eigen::BDCSVD<Eigen::MatrixXcd>(m);
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  return svd_values_only(m).singularValues();
}

double schatten_norm(const Eigen::MatrixXcd& m, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("schatten_norm: requires finite p >= 1");
  const Eigen::VectorXd s = singular_values(m);
  double sum = 0.0;
  for (int i = 0; i < s.size(); ++i) sum += std::pow(s[i], p);
  return std::pow(sum, 1.0 / p);
}

double operator_norm(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s.size() > 0 ? s[0] : 0.0;
}

double smallest_singular_value(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s.size() > 0 ? s[s.size() - 1] : 0.0;
}

double svd_residual(const Eigen::MatrixXcd& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::MatrixXcd rebuilt =
      svd.matrixU() * svd.singularValues().asDiagonal() * svd.matrixV().adjoint();
  const double norm = m.norm();
  if (norm == 0.0) return 0.0;
  return (m - rebuilt).norm() / norm;
}

}  // namespace bandlab
