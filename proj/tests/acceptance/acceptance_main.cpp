// Acceptance suite: each criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bandlab/distortion.hpp"
#include "bandlab/experiment.hpp"
#include "bandlab/json_io.hpp"
#include "bandlab/lt_sums.hpp"
#include "bandlab/operator_checks.hpp"
#include "bandlab/schatten.hpp"
#include "support/oracles.hpp"

using namespace bandlab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::pair<double, int> kPdGrid[] = {{1.5, 1}, {2.0, 1}, {2.0, 2}, {2.0, 3}, {3.0, 3}};

struct Harness {
  int failures = 0;

  void run(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), seconds, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXcd random_complex(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = scale * Complex(gauss(rng), gauss(rng));
  return m;
}

bool check_contour(const DiscretizedOperator& op, double radius, Complex center,
                   std::string& detail) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double angle = 2.0 * kPi * (k + 0.5) / 20.0;
    const Complex z = center + radius * Complex(std::cos(angle), std::sin(angle));
    worst = std::max(worst, verify_resolvent_identity(op, z).residual);
  }
  detail += "max residual " + std::to_string(worst) + "; ";
  return worst <= 1e-9;
}

ExperimentConfig mathieu_bump_config(int n) {
  ExperimentConfig cfg;
  cfg.potential = {"cosine", 2.0, kPi, 0.0, ""};
  cfg.perturbation = {"bump", -2.0, 1.5, 4.0 * kPi, 1.0, 1.0, ""};
  cfg.n = n;
  cfg.length_periods = 8;
  cfg.exponents = {2.0, 1, 1.0};
  cfg.band_e_min = -1.0;
  cfg.band_e_max = 24.0;
  cfg.band_count = 5;
  cfg.band_steps = 1024;
  cfg.seed = 20240901;
  return cfg;
}

}  // namespace

int main() {
  Harness harness;

  harness.run(1, "distortion bounds with fully explicit constants", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const BandSet set({{1.0, 2.0}, {3.0, 4.0}, {5.0, 7.0}, {8.0, 12.0}});
    const Rect region{-5.0, 7.5, -10.0, 10.0};
    bool ok = true;
    double min_margin = 1e300;
    for (const double omega : {0.0, -1.0, -10.0}) {
      const DistortionReport report = verify_distortion(
          set, omega, region, 100000, 424242 + static_cast<std::uint64_t>(-omega));
      min_margin = std::min(min_margin, report.min_margin);
      ok = ok && report.min_margin >= -1e-12;
      if (omega < 0.0) ok = ok && report.counts[2] > 0;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds <= 60.0;
    detail = "min margin " + std::to_string(min_margin);
    return ok;
  });

  harness.run(2, "constant identities eta/c_integral", [](std::string& detail) {
    bool ok = true;
    for (const auto& [p, d] : kPdGrid) {
      const double closed = c_integral(p, d);
      const double identity = std::pow(eta(p, d), 2.0 * p) * std::pow(2.0 * kPi, d);
      ok = ok && std::fabs(identity - closed) <= 1e-12 * closed;
      const double quad = c_integral_quadrature(p, d);
      ok = ok && std::fabs(quad - closed) <= 1e-8 * closed;
    }
    const double reference = c_integral(2.0, 1);
    ok = ok && std::fabs(reference - kPi / 2.0) <= 1e-10 * (kPi / 2.0);
    detail = "c_integral(2,1) = " + std::to_string(reference);
    return ok;
  });

  harness.run(3, "scaling law of the shifted integral", [](std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    for (const double s : {1.0, 4.0, 25.0}) {
      const double quad = shifted_c_integral_quadrature(2.0, 1, s);
      const double closed = std::pow(s, -1.5) * kPi / 2.0;
      const double rel = std::fabs(quad - closed) / closed;
      worst = std::max(worst, rel);
      ok = ok && rel <= 1e-8;
    }
    detail = "worst relative error " + std::to_string(worst);
    return ok;
  });

  harness.run(4, "weight integral and s-integral lower bound", [](std::string& detail) {
    bool ok = std::fabs(weight_integral(1.5, 2.0) - kPi / 16.0) <= 1e-10 * (kPi / 16.0);

    const std::pair<double, double> grid[] = {{0.5, 1.5}, {1.0, 2.0},  {1.5, 2.0},
                                              {2.0, 2.5}, {0.25, 1.0}, {3.0, 3.0},
                                              {2.5, 3.0}, {1.2, 1.8},  {0.8, 1.4},
                                              {4.0, 3.5}};
    for (const auto& [alpha, p] : grid) {
      const double quad = oracle::integrate_from(
          [alpha, p](double t) { return std::pow(t, alpha) / std::pow(1.0 + t, 2.0 * p); },
          0.0);
      ok = ok && std::fabs(weight_integral(alpha, p) - quad) <= 1e-8 * quad;
    }

    const ExponentPack pack{2.0, 1, 1.0};
    for (const double z : {0.0, 1.0, 10.0, 100.0}) {
      const SIntegralCheck check = s_integral_check(z, 1.0, 2.0, pack);
      ok = ok && check.lhs >= check.rhs;
    }
    detail = "weight_integral(1.5,2) = " + std::to_string(weight_integral(1.5, 2.0));
    return ok;
  });

  harness.run(5, "resolvent identity at 20 contour points per model", [](std::string& detail) {
    bool ok = true;

    Eigen::MatrixXd scalar(1, 1);
    scalar << 2.0;
    Eigen::VectorXcd pot(1);
    pot << Complex(-1.0, 0.0);
    const DiscretizedOperator scalar_op = DiscretizedOperator::from_matrices(scalar, pot);
    ok = ok && check_contour(scalar_op, 4.0, Complex(1.5, 0.0), detail);

    std::mt19937_64 rng(777);
    const Eigen::MatrixXd h0 = random_symmetric(64, rng);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(64);
    for (int i = 0; i < 64; ++i) v[i] = 0.5 * Complex(gauss(rng), gauss(rng));
    const DiscretizedOperator random_op = DiscretizedOperator::from_matrices(h0, v);
    const double r64 = operator_norm(random_op.hamiltonian()) + 5.0;
    ok = ok && check_contour(random_op, r64, Complex(0.0, 0.0), detail);

    const PeriodicPotential mathieu = PeriodicPotential::cosine(2.0, kPi);
    auto bump = [](double x) {
      const double u = (x - 2.0 * kPi) / 1.0;
      return Complex(-1.0, 0.8) * std::exp(-u * u);
    };
    const DiscretizedOperator mathieu_op = discretize(mathieu, bump, 256, 8.0 * kPi);
    const double rm = operator_norm(mathieu_op.hamiltonian()) + 10.0;
    ok = ok && check_contour(mathieu_op, rm, Complex(0.0, 0.0), detail);
    return ok;
  });

  harness.run(6, "Neumann and Hoelder property suites", [](std::string& detail) {
    std::mt19937_64 rng(31415);
    int violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Eigen::MatrixXcd t = random_complex(12, rng);
      t *= 0.5 / operator_norm(t);
      const NeumannCheck check = verify_neumann_bound(t);
      if (!check.precondition_met || !check.bound_holds) ++violations;
    }
    const double ps[] = {1.0, 1.5, 2.0, 3.0};
    for (int trial = 0; trial < 1000; ++trial) {
      const Eigen::MatrixXcd a = random_complex(8, rng);
      const Eigen::MatrixXcd b = random_complex(8, rng);
      const auto [lhs, rhs] = verify_schatten_holder(a, b, ps[trial % 4]);
      if (lhs > rhs * (1.0 + 1e-12)) ++violations;
    }
    detail = std::to_string(violations) + " violations";
    return violations == 0;
  });

  harness.run(7, "Hill band structure", [](std::string& detail) {
    const BandComputation free_bands =
        band_edges(PeriodicPotential::free_potential(1.0), 0.0, 50.0, 1);
    bool ok = free_bands.bands_found == 1;  // no gap above the detector threshold
    ok = ok && std::fabs(free_bands.shift_c - 1.0) <= 1e-9;
    ok = ok && std::fabs(free_bands.set.band(0).lo - 1.0) <= 1e-6;
    ok = ok && std::fabs(free_bands.set.band(0).hi - 51.0) <= 1e-6;
    ok = ok && free_bands.max_det_drift <= 1e-9;

    const BandComputation mathieu_bands =
        band_edges(PeriodicPotential::cosine(2.0, kPi), -1.0, 5.0, 2);
    const double a0 = oracle::mathieu_a0(1.0);
    const double b1 = oracle::mathieu_b1(1.0);
    const double c = mathieu_bands.shift_c;
    const double err_a0 = std::fabs(mathieu_bands.set.band(0).lo - c - a0);
    const double err_b1 = std::fabs(mathieu_bands.set.band(0).hi - c - b1);
    ok = ok && err_a0 <= 1e-6 && err_b1 <= 1e-6;
    ok = ok && mathieu_bands.max_det_drift <= 1e-9;
    detail = "edge errors " + std::to_string(err_a0) + ", " + std::to_string(err_b1) +
             "; det drift " + std::to_string(mathieu_bands.max_det_drift);
    return ok;
  });

  harness.run(8, "end-to-end epsilon sweep at n = 512", [](std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const ExperimentConfig cfg = mathieu_bump_config(512);
    const SweepReport sweep = epsilon_sweep(cfg, {1.0, 0.5, 0.25, 0.125});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = sweep.reports.size() == 4;
    for (const LtReport& report : sweep.reports) {
      ok = ok && std::isfinite(report.lt_sum_thm1) && report.lt_sum_thm1 >= 0.0;
      ok = ok && report.chain_holds;  // per-eigenvalue domination to 1e-8
    }
    // Non-increasing in epsilon within 5% slack.
    for (std::size_t i = 0; i + 1 < sweep.reports.size(); ++i) {
      ok = ok && sweep.reports[i + 1].lt_sum_thm1 <=
                     sweep.reports[i].lt_sum_thm1 * 1.05 + 1e-300;
    }
    ok = ok && seconds <= 300.0;
    detail = "sums";
    for (const LtReport& report : sweep.reports)
      detail += " " + std::to_string(report.lt_sum_thm1);
    detail += "; " + std::to_string(seconds) + "s";
    return ok;
  });

  harness.run(9, "byte-identical reports on rerun", [](std::string& detail) {
    const ExperimentConfig cfg = mathieu_bump_config(256);
    const std::string first = canonical_dump(report_to_json(run_experiment(cfg)));
    const std::string second = canonical_dump(report_to_json(run_experiment(cfg)));
    detail = std::to_string(first.size()) + " bytes";
    return !first.empty() && first == second;
  });

  std::printf("%d of 9 criteria passed\n", 9 - harness.failures);
  return harness.failures;
}
