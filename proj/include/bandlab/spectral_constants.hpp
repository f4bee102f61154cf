#pragma once

#include "bandlab/band_set.hpp"
#include "bandlab/quadrature.hpp"

namespace bandlab {

/// Exponent bundle (p, d, tau) with the derived quantities
///   q = 1 - d/(2p) > 0,   alpha = p(q+1) - 1 - tau > 0,
/// subject to p > max(d/2, 1) and 0 < tau < (q+1)p - 1.
struct ExponentPack {
  double p = 2.0;
  int d = 1;
  double tau = 1.0;

  double q() const { return 1.0 - static_cast<double>(d) / (2.0 * p); }
  double alpha() const { return p * (q() + 1.0) - 1.0 - tau; }

  void validate() const;  // throws std::invalid_argument naming the violated constraint
};

/// eta(p, d) = { Gamma(p - d/2) / (2^d pi^{d/2} Gamma(p)) }^{1/(2p)}.
/// Rejects p <= d/2 (Gamma pole / divergent integral).
double eta(double p, int d);

/// Closed form of the integral over R^d of (|x|^2 + 1)^{-p}:
/// pi^{d/2} Gamma(p - d/2) / Gamma(p).  Satisfies
/// eta(p,d)^{2p} = (2 pi)^{-d} c_integral(p,d).
double c_integral(double p, int d);

/// Same integral by adaptive radial quadrature (d <= 3); the independent
/// route against the closed form.
double c_integral_quadrature(double p, int d, const QuadratureOptions& opts = {});

/// Integral over R^d of (|x|^2 + s)^{-p} by radial quadrature; the closed
/// form scales as s^{d/2 - p} c_integral(p, d).
double shifted_c_integral_quadrature(double p, int d, double s,
                                     const QuadratureOptions& opts = {});

struct ThresholdOmega {
  double omega0 = 0.0;  // negative
  double magnitude() const { return -omega0; }
};

/// |omega0| = 1 + a1 + 2 v0_sup + (4 eta(p,d)^2 v_norm)^{1/q}.
ThresholdOmega omega0(double p, int d, double a1, double v0_sup, double v_norm);

/// Beta-type weight integral of t^alpha (1+t)^{-2p} over (0, inf):
/// Beta(alpha + 1, 2p - alpha - 1).  Rejects divergent parameter ranges.
double weight_integral(double alpha, double p);

/// dist(z, bands)^p / (s0 + |z|)^{d/2 + tau}.
double lt_weight(Complex z, const BandSet& set, const ExponentPack& pack, double s0);

struct SIntegralCheck {
  double lhs = 0.0;  // quadrature of s^alpha / ((s+|z|)^p (2s+|z|+a1)^p) over [s0, inf)
  double rhs = 0.0;  // 3^{-p} weight_integral(alpha, p) / (|z| + s0)^{d/2 + tau}
  double quadrature_error = 0.0;
};

/// Requires s0 >= 1 + a1.  Contract: lhs >= rhs.
SIntegralCheck s_integral_check(double z_abs, double a1, double s0, const ExponentPack& pack,
                                const QuadratureOptions& opts = {});

}  // namespace bandlab
