#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bandlab/spectral_constants.hpp"
#include "support/oracles.hpp"

using namespace bandlab;

namespace {

constexpr std::pair<double, int> kPdGrid[] = {{1.5, 1}, {2.0, 1}, {2.0, 2}, {2.0, 3}, {3.0, 3}};

// Independent route for eta via the C library's lgamma.
double eta_reference(double p, double d) {
  const double log_val =
      std::lgamma(p - d / 2.0) - d * std::log(2.0) - (d / 2.0) * std::log(std::numbers::pi) -
      std::lgamma(p);
  return std::exp(log_val / (2.0 * p));
}

}  // namespace

TEST_CASE("exponent pack validation") {
  CHECK_NOTHROW((ExponentPack{2.0, 1, 1.0}).validate());
  CHECK_THROWS_AS((ExponentPack{0.9, 1, 0.5}).validate(), std::invalid_argument);  // p <= 1
  CHECK_THROWS_AS((ExponentPack{1.4, 3, 0.5}).validate(), std::invalid_argument);  // p <= d/2
  CHECK_THROWS_AS((ExponentPack{2.0, 1, 0.0}).validate(), std::invalid_argument);  // tau = 0
  CHECK_THROWS_AS((ExponentPack{2.0, 1, 2.5}).validate(), std::invalid_argument);  // tau big
  CHECK_THROWS_AS((ExponentPack{2.0, 0, 1.0}).validate(), std::invalid_argument);  // d < 1

  const ExponentPack pack{2.0, 1, 1.0};
  CHECK(pack.q() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(pack.alpha() == doctest::Approx(1.5).epsilon(1e-15));
  // 2p - alpha - 1 = d/2 + tau
  CHECK(2.0 * pack.p - pack.alpha() - 1.0 == doctest::Approx(0.5 + pack.tau).epsilon(1e-15));
}

TEST_CASE("eta against frozen values and the lgamma reference") {
  CHECK(eta(2.0, 1) == doctest::Approx(0.70710678118654757).epsilon(1e-13));
  CHECK(eta(2.0, 2) == doctest::Approx(0.53112596601359852).epsilon(1e-13));
  CHECK(eta(3.0, 2) == doctest::Approx(0.58428762748123275).epsilon(1e-13));
  for (const auto& [p, d] : kPdGrid) {
    CHECK(eta(p, d) == doctest::Approx(eta_reference(p, d)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(eta(0.5, 1), std::invalid_argument);   // p <= d/2
  CHECK_THROWS_AS(eta(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(eta(2.0, 0), std::invalid_argument);
}

TEST_CASE("c_integral closed form, identity, and quadrature route") {
  CHECK(c_integral(2.0, 1) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));
  CHECK(c_integral(2.0, 2) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(c_integral(1.0, 1) == doctest::Approx(std::numbers::pi).epsilon(1e-14));

  for (const auto& [p, d] : kPdGrid) {
    const double identity = std::pow(eta(p, d), 2.0 * p) * std::pow(2.0 * std::numbers::pi, d);
    CHECK(identity == doctest::Approx(c_integral(p, d)).epsilon(1e-12));
    CHECK(c_integral_quadrature(p, d) == doctest::Approx(c_integral(p, d)).epsilon(1e-8));
  }
}

TEST_CASE("scaling law of the shifted integral") {
  for (const double s : {1.0, 4.0, 25.0}) {
    const double quad = shifted_c_integral_quadrature(2.0, 1, s);
    const double closed = std::pow(s, 0.5 - 2.0) * c_integral(2.0, 1);
    CHECK(quad == doctest::Approx(closed).epsilon(1e-8));
  }
}

TEST_CASE("omega0 magnitudes") {
  CHECK(omega0(2.0, 1, 1.0, 0.0, 0.0).magnitude() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(omega0(2.0, 1, 1.0, 1.0, 0.0).magnitude() == doctest::Approx(4.0).epsilon(1e-14));
  // eta^2 = 1/2, q = 3/4: |omega0| = 2 + 2^{4/3}
  CHECK(omega0(2.0, 1, 1.0, 0.0, 1.0).magnitude() ==
        doctest::Approx(2.0 + std::pow(2.0, 4.0 / 3.0)).epsilon(1e-13));
  CHECK(omega0(2.0, 1, 1.0, 0.0, 1.0).omega0 < 0.0);
  CHECK_THROWS_AS(omega0(2.0, 1, -1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("weight integral against closed forms and the Simpson oracle") {
  CHECK(weight_integral(1.5, 2.0) == doctest::Approx(std::numbers::pi / 16.0).epsilon(1e-12));
  CHECK(weight_integral(1.0, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  // alpha -> 0+ at p = 1 approaches the arctangent-free limit 1.
  CHECK(weight_integral(1e-8, 1.0) == doctest::Approx(1.0).epsilon(1e-6));

  const std::pair<double, double> grid[] = {{0.5, 1.5}, {1.0, 2.0},  {1.5, 2.0}, {2.0, 2.5},
                                            {0.25, 1.0}, {3.0, 3.0}, {2.5, 3.0}, {1.2, 1.8},
                                            {0.8, 1.4},  {4.0, 3.5}};
  for (const auto& [alpha, p] : grid) {
    const double quad = oracle::integrate_from(
        [alpha, p](double t) { return std::pow(t, alpha) / std::pow(1.0 + t, 2.0 * p); }, 0.0);
    CHECK(weight_integral(alpha, p) == doctest::Approx(quad).epsilon(1e-8));
  }

  CHECK_THROWS_AS(weight_integral(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(weight_integral(3.0, 2.0), std::invalid_argument);  // 2p - alpha - 1 <= 0
}

TEST_CASE("lt weight") {
  const ExponentPack pack{2.0, 1, 1.0};
  const BandSet set({{1.0, 2.0}, {3.0, 4.0}});
  CHECK(lt_weight({1.5, 0.0}, set, pack, 2.0) == 0.0);  // on the spectrum

  // dist^2 = 0.5, |z| = sqrt(6.5): 0.5 / (2 + |z|)^{1.5}
  const double expected = 0.5 / std::pow(2.0 + std::sqrt(6.5), 1.5);
  CHECK(lt_weight({2.5, 0.5}, set, pack, 2.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.0515259).epsilon(1e-5));

  const BandSet single({{1.0, 2.0}});
  const double far = 101.0 / std::pow(12.0, 1.5);
  CHECK(lt_weight({0.0, 10.0}, single, pack, 2.0) == doctest::Approx(far).epsilon(1e-14));
  CHECK(far == doctest::Approx(2.4296).epsilon(1e-4));
}

TEST_CASE("s-integral lower bound") {
  const ExponentPack pack{2.0, 1, 1.0};

  const SIntegralCheck at_one = s_integral_check(1.0, 1.0, 2.0, pack);
  CHECK(at_one.rhs ==
        doctest::Approx(std::numbers::pi / 16.0 / 9.0 / std::pow(3.0, 1.5)).epsilon(1e-12));
  CHECK(at_one.lhs >= at_one.rhs);
  // Oracle route for the quadrature side.
  const double oracle_lhs = oracle::integrate_from(
      [](double s) {
        return std::pow(s, 1.5) / (std::pow(s + 1.0, 2.0) * std::pow(2.0 * s + 2.0, 2.0));
      },
      2.0);
  CHECK(at_one.lhs == doctest::Approx(oracle_lhs).epsilon(1e-9));

  const SIntegralCheck at_zero = s_integral_check(0.0, 1.0, 2.0, pack);
  CHECK(at_zero.lhs >= at_zero.rhs);
  CHECK(at_zero.rhs ==
        doctest::Approx(std::pow(3.0, -2.0) * weight_integral(1.5, 2.0) / std::pow(2.0, 1.5))
            .epsilon(1e-12));

  // Large |z| rearrangement: lhs * |z|^{d/2+tau} stays above
  // 3^{-p} B (1 + s0/|z|)^{-(d/2+tau)}.
  for (const double z : {10.0, 100.0, 1000.0}) {
    const SIntegralCheck check = s_integral_check(z, 1.0, 2.0, pack);
    const double lower = std::pow(3.0, -2.0) * weight_integral(1.5, 2.0) *
                         std::pow(1.0 + 2.0 / z, -1.5);
    CHECK(check.lhs * std::pow(z, 1.5) >= lower * (1.0 - 1e-10));
  }

  CHECK_THROWS_AS(s_integral_check(1.0, 1.0, 1.5, pack), std::invalid_argument);  // s0 < 1+a1
}
