#pragma once

namespace bandlab {

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients),
/// relative error of Gamma below 1e-13 on the range used here.
double log_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
double beta_fn(double a, double b);

}  // namespace bandlab
