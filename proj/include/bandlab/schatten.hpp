#pragma once

#include <Eigen/Dense>

#include "bandlab/band_set.hpp"

namespace bandlab {

/// Descending nonnegative singular values from a full SVD.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

/// Schatten norm (sum of s_i^p)^{1/p}, finite p >= 1.
double schatten_norm(const Eigen::MatrixXcd& m, double p);

/// Operator norm = largest singular value.
double operator_norm(const Eigen::MatrixXcd& m);

/// Smallest singular value.
double smallest_singular_value(const Eigen::MatrixXcd& m);

/// ||M - U S V*|| / ||M|| for the factorization used by singular_values;
/// exposed so tests can pin the SVD residual.
double svd_residual(const Eigen::MatrixXcd& m);

}  // namespace bandlab
