#include "bandlab/operator_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bandlab/schatten.hpp"

namespace bandlab {

ResolventCheck verify_resolvent_identity(const DiscretizedOperator& op, Complex z) {
  const int n = op.n;
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd h0 = op.h0.cast<Complex>();
  Eigen::MatrixXcd h = op.hamiltonian();

  Eigen::MatrixXcd h0_shift = h0 - z * identity;
  Eigen::MatrixXcd h_shift = h - z * identity;

  ResolventCheck check;
  check.z = z;
  check.smin_h0 = smallest_singular_value(h0_shift);
  if (check.smin_h0 <= 1e-8 * operator_norm(h0_shift))
    throw NearSpectrum("z is numerically on the spectrum of H0");

  const Eigen::MatrixXcd r0 = h0_shift.partialPivLu().solve(identity);

  // Middle factor I + V2 R0 V1; its degeneration is the Birman-Schwinger
  // signature of z hitting the perturbed spectrum.
  Eigen::MatrixXcd middle = identity + op.v2.asDiagonal() * r0 * op.v1.asDiagonal();
  const double middle_smin = smallest_singular_value(middle);
  if (middle_smin <= 1e-12 * std::max(1.0, operator_norm(middle)))
    throw MiddleFactorSingular("I + V2 R(z,H0) V1 is numerically singular");

  check.smin_h = smallest_singular_value(h_shift);
  if (check.smin_h <= 1e-8 * operator_norm(h_shift))
    throw NearSpectrum("z is numerically on the spectrum of H");

  const Eigen::MatrixXcd r = h_shift.partialPivLu().solve(identity);

  const Eigen::MatrixXcd inner = middle.partialPivLu().solve(op.v2.asDiagonal() * r0);
  const Eigen::MatrixXcd rhs = r0 - r0 * op.v1.asDiagonal() * inner;

  check.residual = operator_norm(r - rhs) / operator_norm(r);
  return check;
}

std::pair<double, double> verify_schatten_holder(const Eigen::MatrixXcd& a,
                                                 const Eigen::MatrixXcd& b, double p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("holder: incompatible dimensions");
  const double lhs = schatten_norm(a * b, p);
  const double rhs = schatten_norm(a, 2.0 * p) * schatten_norm(b, 2.0 * p);
  return {lhs, rhs};
}

NeumannCheck verify_neumann_bound(const Eigen::MatrixXcd& t) {
  NeumannCheck check;
  check.norm_t = operator_norm(t);
  // Rounding slack so matrices rescaled exactly onto the boundary qualify.
  check.precondition_met = check.norm_t <= 0.5 * (1.0 + 1e-12);
  if (!check.precondition_met) return check;  // skipped, reported
  const Eigen::MatrixXcd shifted =
      Eigen::MatrixXcd::Identity(t.rows(), t.cols()) + t;
  check.norm_inv = 1.0 / smallest_singular_value(shifted);
  check.bound_holds = check.norm_inv <= 2.0 * (1.0 + 1e-12);
  return check;
}

KatoChainReport kato_chain_report(const DiscretizedOperator& op, double omega,
                                  const ExponentPack& pack) {
  pack.validate();
  KatoChainReport report;
  report.omega = omega;
  report.v0_sup = op.v0_sup();
  report.v_norm_p = op.v_norm(pack.p);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> h0_eigs(op.h0,
                                                         Eigen::EigenvaluesOnly);
  report.a1 = h0_eigs.eigenvalues()[0];
  report.omega0_magnitude =
      omega0(pack.p, pack.d, std::max(report.a1, 1e-12), report.v0_sup, report.v_norm_p)
          .magnitude();
  if (!(omega <= -report.omega0_magnitude))
    throw std::invalid_argument("kato_chain_report: requires omega <= omega0 = " +
                                std::to_string(-report.omega0_magnitude));

  const int n = op.n;
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd h0 = op.h0.cast<Complex>();
  const Eigen::MatrixXcd r0 =
      (h0 - Complex(omega, 0.0) * identity).partialPivLu().solve(identity);
  const Eigen::MatrixXcd r =
      (op.hamiltonian() - Complex(omega, 0.0) * identity).partialPivLu().solve(identity);

  const Eigen::MatrixXcd sandwich = op.v2.asDiagonal() * r0 * op.v1.asDiagonal();
  report.sandwich.quantity = "norm(V2 R(omega,H0) V1)";
  report.sandwich.value = operator_norm(sandwich);
  report.sandwich.bound = 0.5;
  report.sandwich.ratio = report.sandwich.value / report.sandwich.bound;
  report.sandwich.verdict = report.sandwich.value <= 0.5 * (1.0 + 1e-12) ? "within" : "exceeds";

  const double q = pack.q();
  report.resolvent_diff.quantity = "schatten_p(R(omega,H) - R(omega,H0))";
  report.resolvent_diff.value = schatten_norm(r - r0, pack.p);
  report.resolvent_diff.bound =
      4.0 * eta(pack.p, pack.d) * eta(pack.p, pack.d) * report.v_norm_p /
      std::pow(std::fabs(omega), q + 1.0);
  report.resolvent_diff.ratio =
      report.resolvent_diff.bound > 0.0
          ? report.resolvent_diff.value / report.resolvent_diff.bound
          : (report.resolvent_diff.value > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  report.resolvent_diff.verdict = "empirical-only";
  return report;
}

double hansmann_ratio(const Eigen::MatrixXcd& a0, const Eigen::MatrixXcd& a, double p) {
  if (a0.rows() != a0.cols() || a.rows() != a.cols() || a0.rows() != a.rows())
    throw std::invalid_argument("hansmann_ratio: square matrices of equal size required");
  if ((a0 - a0.adjoint()).norm() > 1e-12 * std::max(1.0, a0.norm()))
    throw std::invalid_argument("hansmann_ratio: A0 must be Hermitian");
  const double denom = schatten_norm(a - a0, p);
  if (denom == 0.0) throw std::invalid_argument("hansmann_ratio: A - A0 must be nonzero");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> base(a0, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd base_eigs = base.eigenvalues();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> pert(a, /*computeEigenvectors=*/false);
  if (pert.info() != Eigen::Success)
    throw NonConvergence(-1, "eigensolver failed in hansmann_ratio");

  double sum = 0.0;
  for (int i = 0; i < pert.eigenvalues().size(); ++i) {
    const Complex lambda = pert.eigenvalues()[i];
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < base_eigs.size(); ++j)
      dist = std::min(dist, std::abs(lambda - Complex(base_eigs[j], 0.0)));
    sum += std::pow(dist, p);
  }
  return sum / std::pow(denom, p);
}

}  // namespace bandlab
