#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "bandlab/band_set.hpp"
#include "bandlab/hill.hpp"

namespace bandlab {

/// Dense periodic-grid model of H0 = -Laplacian + V0 and H = H0 + V with the
/// factorization V = V2 V1, V1 = |V|^{1/2}, V2 = sign(V) |V|^{1/2}
/// (sign(0) := 0).  V1 and V2 are diagonal; only their diagonals are stored.
struct DiscretizedOperator {
  int n = 0;
  double length = 0.0;  // domain length, periodic boundary
  double h = 0.0;       // mesh size = length / n, also the grid measure

  Eigen::MatrixXd h0;    // real symmetric
  Eigen::VectorXd v0;    // grid samples of the periodic potential (with shift)
  Eigen::VectorXcd v;    // grid samples of the perturbation
  Eigen::VectorXcd v1;   // |v|^{1/2}
  Eigen::VectorXcd v2;   // v / v1 where v != 0

  Eigen::MatrixXcd hamiltonian() const;  // h0 + diag(v)

  double v0_sup() const { return v0.cwiseAbs().maxCoeff(); }
  /// Grid-measure L^p norm: (h * sum |v_j|^p)^{1/p}.
  double v_norm(double p) const;

  /// Wraps externally built matrices (tests, ad-hoc models) with the same
  /// Kato factorization.
  static DiscretizedOperator from_matrices(Eigen::MatrixXd h0_in, Eigen::VectorXcd v_in,
                                           double mesh = 1.0);
};

/// Second-order central differences on n >= 16 points over [0, length)
/// with periodic boundary; length must be an integer multiple of the
/// potential period.
DiscretizedOperator discretize(const PeriodicPotential& v0,
                               const std::function<Complex(double)>& v, int n, double length);

struct EigenDecomposition {
  std::vector<Complex> values;      // all n eigenvalues, sorted by (Re, Im)
  double max_backward_error = 0.0;  // ||Mv - lambda v|| / ||M|| over sampled pairs
};

/// Dense complex eigensolver (Schur based) with a mandatory backward-error
/// check on 10 sampled pairs refined by one inverse-iteration step.
/// Throws NonConvergence if the decomposition fails and std::invalid_argument
/// above the dense size limit.
EigenDecomposition eigenvalues_checked(const Eigen::MatrixXcd& m, int dense_limit = 2048);

/// Convenience: just the sorted eigenvalues.
std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m, int dense_limit = 2048);

/// Keeps eigenvalues with dist(z, bands) > tol; requires tol > 0 (guards
/// against treating discretization noise as discrete spectrum).
std::vector<Complex> discrete_spectrum_outside(const std::vector<Complex>& eigs,
                                               const BandSet& set, double tol);

}  // namespace bandlab
