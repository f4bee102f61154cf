#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bandlab/operators.hpp"
#include "bandlab/spectral_constants.hpp"

namespace bandlab {

struct ResolventCheck {
  Complex z;
  double residual = 0.0;  // ||LHS - RHS|| / ||R(z,H)||, operator norms
  double smin_h = 0.0;    // smallest singular value of H - z
  double smin_h0 = 0.0;   // smallest singular value of H0 - z
};

/// Checks R(z,H) = R(z,H0) - R(z,H0) V1 [I + V2 R(z,H0) V1]^{-1} V2 R(z,H0)
/// on the discretization.  Throws NearSpectrum when either side is within
/// 1e-8 * norm of being singular, MiddleFactorSingular when I + V2 R V1 is.
ResolventCheck verify_resolvent_identity(const DiscretizedOperator& op, Complex z);

/// Schatten-Hoelder: returns (||AB||_{S_p}, ||A||_{S_2p} ||B||_{S_2p}).
std::pair<double, double> verify_schatten_holder(const Eigen::MatrixXcd& a,
                                                 const Eigen::MatrixXcd& b, double p);

struct NeumannCheck {
  double norm_t = 0.0;
  double norm_inv = 0.0;
  bool precondition_met = false;  // ||T|| <= 1/2
  bool bound_holds = false;       // ||(I+T)^{-1}|| <= 2 (within rounding)
};

/// Precondition failure is reported, not thrown: the check is skipped.
NeumannCheck verify_neumann_bound(const Eigen::MatrixXcd& t);

struct EmpiricalItem {
  std::string quantity;
  double value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;        // value / bound
  std::string verdict;       // "within" | "exceeds" | "empirical-only"
};

struct KatoChainReport {
  double omega = 0.0;
  double omega0_magnitude = 0.0;
  double a1 = 0.0;      // smallest eigenvalue of the discretized H0
  double v0_sup = 0.0;
  double v_norm_p = 0.0;  // grid-measure L^p norm
  EmpiricalItem sandwich;        // ||V2 R(omega,H0) V1|| vs 1/2
  EmpiricalItem resolvent_diff;  // ||R(omega,H)-R(omega,H0)||_{S_p} vs continuum bound
};

/// Consistency report on the discretization; the resolvent-difference item is
/// empirical only (no finite-dimensional theorem pins the continuum constant).
/// Requires omega <= omega0 computed from the operator's own norms.
KatoChainReport kato_chain_report(const DiscretizedOperator& op, double omega,
                                  const ExponentPack& pack);

/// Empirical ratio  sum_{z in spec(A)} dist(z, spec(A0))^p / ||A - A0||_{S_p}^p
/// for Hermitian A0; never asserts a value, only records it.
double hansmann_ratio(const Eigen::MatrixXcd& a0, const Eigen::MatrixXcd& a, double p);

}  // namespace bandlab
