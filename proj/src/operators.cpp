#include "bandlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bandlab {

Eigen::MatrixXcd DiscretizedOperator::hamiltonian() const {
  Eigen::MatrixXcd m = h0.cast<Complex>();
  m.diagonal() += v;
  return m;
}

double DiscretizedOperator::v_norm(double p) const {
  double sum = 0.0;
  for (int j = 0; j < v.size(); ++j) sum += std::pow(std::abs(v[j]), p);
  return std::pow(h * sum, 1.0 / p);
}

namespace {

void kato_factorize(DiscretizedOperator& op) {
  const auto n = op.v.size();
  op.v1.resize(n);
  op.v2.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(op.v[j]);
    if (mag == 0.0) {
      op.v1[j] = 0.0;
      op.v2[j] = 0.0;  // sign(0) := 0 keeps the factorization exact
    } else {
      const double root = std::sqrt(mag);
      op.v1[j] = root;
      op.v2[j] = op.v[j] / root;
    }
  }
}

}  // namespace

DiscretizedOperator DiscretizedOperator::from_matrices(Eigen::MatrixXd h0_in,
                                                       Eigen::VectorXcd v_in, double mesh) {
  if (h0_in.rows() != h0_in.cols() || h0_in.rows() != v_in.size())
    throw std::invalid_argument("from_matrices: dimension mismatch");
  DiscretizedOperator op;
  op.n = static_cast<int>(h0_in.rows());
  op.h = mesh;
  op.length = mesh * static_cast<double>(op.n);
  op.h0 = std::move(h0_in);
  op.v0 = op.h0.diagonal();
  op.v = std::move(v_in);
  kato_factorize(op);
  return op;
}

DiscretizedOperator discretize(const PeriodicPotential& v0,
                               const std::function<Complex(double)>& v, int n, double length) {
  if (n < 16) throw std::invalid_argument("discretize: needs n >= 16 grid points");
  const double periods = length / v0.period();
  if (std::fabs(periods - std::round(periods)) > 1e-9 * std::max(1.0, periods))
    throw std::invalid_argument("discretize: domain length must be a multiple of the period");

  DiscretizedOperator op;
  op.n = n;
  op.length = length;
  op.h = length / static_cast<double>(n);
  const double inv_h2 = 1.0 / (op.h * op.h);

  op.h0 = Eigen::MatrixXd::Zero(n, n);
  op.v0.resize(n);
  op.v.resize(n);
  for (int j = 0; j < n; ++j) {
    const double x = op.h * static_cast<double>(j);
    op.v0[j] = v0(x);
    op.v[j] = v(x);
    op.h0(j, j) = 2.0 * inv_h2 + op.v0[j];
    const int next = (j + 1) % n;
    op.h0(j, next) = -inv_h2;
    op.h0(next, j) = -inv_h2;
  }
  kato_factorize(op);
  return op;
}

namespace {

double operator_norm_estimate(const Eigen::MatrixXcd& m, int iterations = 40) {
  // Power iteration on M* M.  Seeded start so no eigenspace is missed by
  // symmetry; floored by the rigorous Frobenius/sqrt(n) lower bound.
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd w(m.cols());
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = Complex(gauss(rng), gauss(rng));
  w.normalize();
  double norm = 0.0;
  for (int i = 0; i < iterations; ++i) {
    w = m.adjoint() * (m * w);
    const double len = w.norm();
    if (len == 0.0) break;
    norm = std::sqrt(len);
    w /= len;
  }
  const double floor = m.norm() / std::sqrt(static_cast<double>(m.cols()));
  return std::max(norm, floor);
}

}  // namespace

EigenDecomposition eigenvalues_checked(const Eigen::MatrixXcd& m, int dense_limit) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n > dense_limit)
    throw std::invalid_argument("eigenvalues: n = " + std::to_string(n) +
                                " exceeds dense solver limit " + std::to_string(dense_limit));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw NonConvergence(-1, "complex eigensolver failed to converge");

  EigenDecomposition result;
  result.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) result.values[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];

  // Backward-error check on up to 10 spread-out pairs, each refined by one
  // inverse-iteration step.
  const double scale = std::max(operator_norm_estimate(m), 1e-300);
  const int samples = std::min(10, n);
  for (int s = 0; s < samples; ++s) {
    const int idx = static_cast<int>((static_cast<long long>(s) * n) / samples);
    const Complex lambda = solver.eigenvalues()[idx];
    Eigen::VectorXcd vec = solver.eigenvectors().col(idx);
    double residual = (m * vec - lambda * vec).norm() / (scale * vec.norm());

    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() -= lambda;
    Eigen::VectorXcd refined = shifted.partialPivLu().solve(vec);
    if (refined.allFinite() && refined.norm() > 0.0) {
      refined.normalize();
      const Complex rayleigh = refined.dot(m * refined);
      const double refined_residual =
          (m * refined - rayleigh * refined).norm() / scale;
      residual = std::min(residual, refined_residual);
    }
    result.max_backward_error = std::max(result.max_backward_error, residual);
  }
  if (result.max_backward_error > 1e-8)
    throw NonConvergence(-1, "eigenpair backward error " +
                                 std::to_string(result.max_backward_error) + " exceeds 1e-8");

  std::sort(result.values.begin(), result.values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return result;
}

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m, int dense_limit) {
  return eigenvalues_checked(m, dense_limit).values;
}

std::vector<Complex> discrete_spectrum_outside(const std::vector<Complex>& eigs,
                                               const BandSet& set, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("discrete_spectrum_outside: tol must be positive");
  std::vector<Complex> outside;
  for (const Complex& z : eigs)
    if (dist_to_bands(z, set) > tol) outside.push_back(z);
  return outside;
}

}  // namespace bandlab
