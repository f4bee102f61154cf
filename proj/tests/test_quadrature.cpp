#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bandlab/errors.hpp"
#include "bandlab/quadrature.hpp"
#include "support/oracles.hpp"

using namespace bandlab;

TEST_CASE("polynomials integrate exactly") {
  const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand") {
  const auto r = integrate([](double x) { return std::sin(x); }, 0.0, 10.0 * std::numbers::pi);
  CHECK(r.converged);
  CHECK(std::fabs(r.value) < 1e-10);
}

TEST_CASE("semi-infinite exponential tail") {
  const auto r = integrate_from([](double s) { return std::exp(-s); }, 0.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

  const auto shifted = integrate_from([](double s) { return std::exp(-s); }, 2.0);
  CHECK(shifted.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("heavy algebraic tail matches the Simpson oracle") {
  auto f = [](double s) { return 1.0 / std::pow(1.0 + s, 2.5); };
  const auto r = integrate_from(f, 0.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(r.value == doctest::Approx(oracle::integrate_from(f, 0.0)).epsilon(1e-9));
}

TEST_CASE("non-convergence reports the achieved error") {
  // Integrable singularity with a starved subdivision budget.
  QuadratureOptions opts;
  opts.max_segments = 4;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-15;
  auto f = [](double s) { return 1.0 / std::sqrt(s - 2.0 + 1e-14); };
  CHECK_THROWS_AS(integrate_from_or_throw(f, 2.0, opts), QuadratureError);
  try {
    integrate_from_or_throw(f, 2.0, opts);
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error > 0.0);
  }
}
