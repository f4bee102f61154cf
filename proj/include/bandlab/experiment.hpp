#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bandlab/band_set.hpp"
#include "bandlab/hill.hpp"
#include "bandlab/spectral_constants.hpp"

namespace bandlab {

struct PotentialSpec {
  std::string kind = "free";  // "free" | "cosine" | "table"
  double amplitude = 0.0;
  double period = 3.141592653589793;
  double shift = 0.0;
  std::string table_path;  // CSV (x, value) for kind == "table"
};

struct PerturbationSpec {
  std::string kind = "bump";  // "bump" | "random" | "table"
  double amplitude_re = 0.0;
  double amplitude_im = 0.0;
  double center = 0.0;
  double width = 1.0;       // bump: Gaussian width; random: support half-width
  double epsilon = 1.0;     // overall scale
  std::string table_path;   // CSV (x, re, im) for kind == "table"
};

struct ExperimentConfig {
  PotentialSpec potential;
  PerturbationSpec perturbation;
  int n = 512;
  int length_periods = 8;  // domain length = length_periods * period
  ExponentPack exponents;
  double band_e_min = -1.0;
  double band_e_max = 24.0;
  int band_count = 5;
  int band_steps = 1024;
  std::uint64_t seed = 1;
  std::string report_path;
  std::string eigenvalues_csv;
  std::string bands_csv;

  double length() const { return static_cast<double>(length_periods) * potential.period; }
  void validate() const;  // throws ConfigError naming the offending field
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

struct ChainEntry {
  Complex z;
  double lhs = 0.0;  // s-integral (quadrature)
  double rhs = 0.0;  // 3^{-p} B(alpha+1, d/2+tau) / (s0+|z|)^{d/2+tau}
};

struct LtReport {
  BandSet bands;
  double shift_c = 0.0;
  ExponentPack pack;
  double s0 = 0.0;  // |omega0|
  double v0_sup = 0.0;
  double v_norm_p = 0.0;
  std::vector<Complex> eigenvalues_full;
  std::vector<Complex> discrete_candidates;
  double filter_base_tol = 0.0;
  double window_max = 0.0;
  double lt_sum_thm1 = 0.0;
  double lt_sum_prop1 = 0.0;  // at omega = omega0
  double rhs_scale_thm1 = 0.0;   // ||V||_p^p / s0^tau
  double rhs_scale_prop1 = 0.0;  // ||V||_p^p / s0^{(q+1)p}
  std::optional<double> empirical_constant_thm1;
  std::optional<double> empirical_constant_prop1;
  double corollary_sum = 0.0;      // sum dist^p / (1+|z|)^{d/2+tau}
  double corollary_scale_c1 = 0.0; // (1+s0)^{d/2} ||V||_p^p
  double corollary_scale_c2 = 0.0; // [(1+v0_sup)(1+||V||_p)]^{d/2q} ||V||_p^p
  std::vector<ChainEntry> chain;   // per discrete candidate
  double chain_max_violation = 0.0;
  bool chain_holds = true;
  int near_cluster_pairs = 0;  // candidate pairs with gap below 1e-6
  std::string config_hash;
  std::uint64_t seed = 0;
};

nlohmann::json report_to_json(const LtReport& report);

/// Full pipeline: bands -> discretize -> eigenvalues -> filter -> sums.
/// Deterministic given the config (including seeds); writes the JSON report
/// and CSV plot data when paths are configured.
LtReport run_experiment(const ExperimentConfig& cfg);

struct SweepReport {
  std::vector<double> epsilons;
  std::vector<LtReport> reports;
  std::optional<double> loglog_slope;  // of lt_sum_thm1 vs epsilon
  std::optional<bool> slope_expectation_met;  // slope >= p - 0.5, reported not asserted
  std::optional<double> empirical_constant_min;
  std::optional<double> empirical_constant_max;
};

nlohmann::json sweep_to_json(const SweepReport& sweep);

/// Runs the experiment per epsilon (descending, positive), in parallel.
SweepReport epsilon_sweep(const ExperimentConfig& cfg, const std::vector<double>& epsilons);

}  // namespace bandlab
