#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bandlab/special_functions.hpp"

using namespace bandlab;

TEST_CASE("log_gamma matches the C library across a wide grid") {
  // std::lgamma is the independent reference here.
  for (double x = 0.05; x < 50.0; x += 0.0831) {
    const double mine = log_gamma(x);
    const double ref = std::lgamma(x);
    CHECK(std::fabs(mine - ref) <= 1e-13 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("gamma at half-integers and integers") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x = 0.1; x < 20.0; x += 0.37) {
    CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
  }
}

TEST_CASE("beta function symmetry and known values") {
  CHECK(beta_fn(2.5, 1.5) == doctest::Approx(std::numbers::pi / 16.0).epsilon(1e-13));
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double a = 0.3; a < 5.0; a += 0.71) {
    for (double b = 0.2; b < 4.0; b += 0.53) {
      CHECK(beta_fn(a, b) == doctest::Approx(beta_fn(b, a)).epsilon(1e-13));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::invalid_argument);
}
