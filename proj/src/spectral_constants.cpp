#include "bandlab/spectral_constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bandlab/special_functions.hpp"

namespace bandlab {

void ExponentPack::validate() const {
  if (d < 1) throw std::invalid_argument("exponents.d: dimension must be an integer >= 1");
  if (!(p > std::max(static_cast<double>(d) / 2.0, 1.0)))
    throw std::invalid_argument("exponents.p: requires p > max(d/2, 1)");
  if (!(q() > 0.0)) throw std::invalid_argument("exponents.p: derived q must be positive");
  const double tau_max = (q() + 1.0) * p - 1.0;
  if (!(tau > 0.0) || !(tau < tau_max))
    throw std::invalid_argument("exponents.tau: requires 0 < tau < (q+1)p - 1 = " +
                                std::to_string(tau_max));
}

double eta(double p, int d) {
  if (d < 1) throw std::invalid_argument("eta: dimension must be an integer >= 1");
  if (!(p > static_cast<double>(d) / 2.0))
    throw std::invalid_argument("eta: requires p > d/2 (Gamma pole)");
  const double half_d = static_cast<double>(d) / 2.0;
  const double log_val = log_gamma(p - half_d) - static_cast<double>(d) * std::log(2.0) -
                         half_d * std::log(std::numbers::pi) - log_gamma(p);
  return std::exp(log_val / (2.0 * p));
}

double c_integral(double p, int d) {
  if (d < 1) throw std::invalid_argument("c_integral: dimension must be an integer >= 1");
  if (!(p > static_cast<double>(d) / 2.0))
    throw std::invalid_argument("c_integral: requires p > d/2");
  const double half_d = static_cast<double>(d) / 2.0;
  return std::exp(half_d * std::log(std::numbers::pi) + log_gamma(p - half_d) - log_gamma(p));
}

namespace {

// Surface measure of the unit sphere in R^d, d <= 3.
double sphere_surface(int d) {
  switch (d) {
    case 1:
      return 2.0;
    case 2:
      return 2.0 * std::numbers::pi;
    case 3:
      return 4.0 * std::numbers::pi;
    default:
      throw std::invalid_argument("radial quadrature implemented for d in {1,2,3}");
  }
}

}  // namespace

double c_integral_quadrature(double p, int d, const QuadratureOptions& opts) {
  return shifted_c_integral_quadrature(p, d, 1.0, opts);
}

double shifted_c_integral_quadrature(double p, int d, double s, const QuadratureOptions& opts) {
  if (!(s > 0.0)) throw std::invalid_argument("shift s must be positive");
  const double surface = sphere_surface(d);
  auto radial = [p, d, s](double r) {
    return std::pow(r, d - 1) / std::pow(r * r + s, p);
  };
  return surface * integrate_from_or_throw(radial, 0.0, opts);
}

ThresholdOmega omega0(double p, int d, double a1, double v0_sup, double v_norm) {
  if (!(a1 > 0.0)) throw std::invalid_argument("omega0: a1 must be positive");
  if (v0_sup < 0.0 || v_norm < 0.0)
    throw std::invalid_argument("omega0: potential norms must be nonnegative");
  const double e = eta(p, d);
  const double q = 1.0 - static_cast<double>(d) / (2.0 * p);
  if (!(q > 0.0)) throw std::invalid_argument("omega0: requires q = 1 - d/2p > 0");
  double perturbation = 0.0;
  if (v_norm > 0.0) perturbation = std::pow(4.0 * e * e * v_norm, 1.0 / q);
  const double magnitude = 1.0 + a1 + 2.0 * v0_sup + perturbation;
  return ThresholdOmega{-magnitude};
}

double weight_integral(double alpha, double p) {
  if (!(alpha > 0.0)) throw std::invalid_argument("weight_integral: requires alpha > 0");
  if (!(2.0 * p - alpha - 1.0 > 0.0))
    throw std::invalid_argument("weight_integral: requires 2p - alpha - 1 > 0 (divergent tail)");
  return beta_fn(alpha + 1.0, 2.0 * p - alpha - 1.0);
}

double lt_weight(Complex z, const BandSet& set, const ExponentPack& pack, double s0) {
  pack.validate();
  const double dist = dist_to_bands(z, set);
  if (dist == 0.0) return 0.0;
  const double exponent = static_cast<double>(pack.d) / 2.0 + pack.tau;
  return std::pow(dist, pack.p) / std::pow(s0 + std::abs(z), exponent);
}

SIntegralCheck s_integral_check(double z_abs, double a1, double s0, const ExponentPack& pack,
                                const QuadratureOptions& opts) {
  pack.validate();
  if (z_abs < 0.0) throw std::invalid_argument("s_integral_check: |z| must be nonnegative");
  if (!(s0 >= 1.0 + a1))
    throw std::invalid_argument("s_integral_check: requires s0 >= 1 + a1");
  const double alpha = pack.alpha();
  const double p = pack.p;
  auto integrand = [alpha, p, z_abs, a1](double s) {
    return std::pow(s, alpha) /
           (std::pow(s + z_abs, p) * std::pow(2.0 * s + z_abs + a1, p));
  };
  const QuadratureResult quad = integrate_from(integrand, s0, opts);
  if (!quad.converged)
    throw QuadratureError(quad.error, "s-integral quadrature did not converge; achieved " +
                                          std::to_string(quad.error));
  const double exponent = static_cast<double>(pack.d) / 2.0 + pack.tau;
  SIntegralCheck check;
  check.lhs = quad.value;
  check.rhs = std::pow(3.0, -p) * weight_integral(alpha, p) / std::pow(z_abs + s0, exponent);
  check.quadrature_error = quad.error;
  return check;
}

}  // namespace bandlab
