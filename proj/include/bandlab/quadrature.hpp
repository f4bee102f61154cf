#pragma once

#include <functional>

namespace bandlab {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int segments = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_segments = 4000;
};

/// Globally adaptive Gauss-Kronrod 7/15 on a finite interval.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral over [a, +inf), tail substitution s = a + u/(1-u).
QuadratureResult integrate_from(const std::function<double(double)>& f, double a,
                                const QuadratureOptions& opts = {});

/// As integrate_from but throws QuadratureError (with the achieved error
/// estimate) when the tolerance was not met.
double integrate_from_or_throw(const std::function<double(double)>& f, double a,
                               const QuadratureOptions& opts = {});

}  // namespace bandlab
