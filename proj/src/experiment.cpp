#include "bandlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "bandlab/json_io.hpp"
#include "bandlab/lt_sums.hpp"
#include "bandlab/operators.hpp"

namespace bandlab {

namespace {

constexpr const char* kVersion = "bandlab 0.1.0";

std::vector<std::pair<double, double>> read_csv_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x, v;
    if (ss >> x >> v) rows.emplace_back(x, v);
  }
  if (rows.size() < 2) throw ConfigError("table file " + path + " needs at least two rows");
  return rows;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (potential.kind != "free" && potential.kind != "cosine" && potential.kind != "table")
    throw ConfigError("potential.kind: expected free|cosine|table, got " + potential.kind);
  if (!(potential.period > 0.0)) throw ConfigError("potential.period: must be positive");
  if (potential.kind == "table" && potential.table_path.empty())
    throw ConfigError("potential.table: path required for table potentials");
  if (perturbation.kind == "table" && perturbation.table_path.empty())
    throw ConfigError("perturbation.table: path required for table perturbations");
  if (perturbation.kind != "bump" && perturbation.kind != "random" &&
      perturbation.kind != "table")
    throw ConfigError("perturbation.kind: expected bump|random|table, got " + perturbation.kind);
  if (!(perturbation.epsilon >= 0.0)) throw ConfigError("perturbation.epsilon: must be >= 0");
  if (perturbation.kind != "table" && !(perturbation.width > 0.0))
    throw ConfigError("perturbation.width: must be positive");
  if (n < 16) throw ConfigError("discretization.n: needs n >= 16");
  if (length_periods < 1) throw ConfigError("discretization.length_periods: must be >= 1");
  try {
    exponents.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(band_e_min < band_e_max)) throw ConfigError("bands.e_min/e_max: empty energy range");
  if (band_count < 1) throw ConfigError("bands.k: must be >= 1");
  if (band_steps < 100) throw ConfigError("bands.steps: must be >= 100");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("potential")) {
      const auto& p = j.at("potential");
      cfg.potential.kind = p.value("kind", cfg.potential.kind);
      cfg.potential.amplitude = p.value("amplitude", cfg.potential.amplitude);
      cfg.potential.period = p.value("period", cfg.potential.period);
      cfg.potential.shift = p.value("shift", cfg.potential.shift);
      cfg.potential.table_path = p.value("table", cfg.potential.table_path);
    }
    if (j.contains("perturbation")) {
      const auto& p = j.at("perturbation");
      cfg.perturbation.kind = p.value("kind", cfg.perturbation.kind);
      cfg.perturbation.amplitude_re = p.value("amplitude_re", cfg.perturbation.amplitude_re);
      cfg.perturbation.amplitude_im = p.value("amplitude_im", cfg.perturbation.amplitude_im);
      cfg.perturbation.center = p.value("center", cfg.perturbation.center);
      cfg.perturbation.width = p.value("width", cfg.perturbation.width);
      cfg.perturbation.epsilon = p.value("epsilon", cfg.perturbation.epsilon);
      cfg.perturbation.table_path = p.value("table", cfg.perturbation.table_path);
    }
    if (j.contains("discretization")) {
      const auto& p = j.at("discretization");
      cfg.n = p.value("n", cfg.n);
      cfg.length_periods = p.value("length_periods", cfg.length_periods);
    }
    if (j.contains("exponents")) {
      const auto& p = j.at("exponents");
      cfg.exponents.p = p.value("p", cfg.exponents.p);
      cfg.exponents.d = p.value("d", cfg.exponents.d);
      cfg.exponents.tau = p.value("tau", cfg.exponents.tau);
    }
    if (j.contains("bands")) {
      const auto& p = j.at("bands");
      cfg.band_e_min = p.value("e_min", cfg.band_e_min);
      cfg.band_e_max = p.value("e_max", cfg.band_e_max);
      cfg.band_count = p.value("k", cfg.band_count);
      cfg.band_steps = p.value("steps", cfg.band_steps);
    }
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("output")) {
      const auto& p = j.at("output");
      cfg.report_path = p.value("report", cfg.report_path);
      cfg.eigenvalues_csv = p.value("eigenvalues_csv", cfg.eigenvalues_csv);
      cfg.bands_csv = p.value("bands_csv", cfg.bands_csv);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["potential"] = {{"kind", cfg.potential.kind},
                    {"amplitude", cfg.potential.amplitude},
                    {"period", cfg.potential.period},
                    {"shift", cfg.potential.shift},
                    {"table", cfg.potential.table_path}};
  j["perturbation"] = {{"kind", cfg.perturbation.kind},
                       {"amplitude_re", cfg.perturbation.amplitude_re},
                       {"amplitude_im", cfg.perturbation.amplitude_im},
                       {"center", cfg.perturbation.center},
                       {"width", cfg.perturbation.width},
                       {"epsilon", cfg.perturbation.epsilon},
                       {"table", cfg.perturbation.table_path}};
  j["discretization"] = {{"n", cfg.n}, {"length_periods", cfg.length_periods}};
  j["exponents"] = {{"p", cfg.exponents.p}, {"d", cfg.exponents.d}, {"tau", cfg.exponents.tau}};
  j["bands"] = {{"e_min", cfg.band_e_min},
                {"e_max", cfg.band_e_max},
                {"k", cfg.band_count},
                {"steps", cfg.band_steps}};
  j["seed"] = cfg.seed;
  j["output"] = {{"report", cfg.report_path},
                 {"eigenvalues_csv", cfg.eigenvalues_csv},
                 {"bands_csv", cfg.bands_csv}};
  return j;
}

namespace {

PeriodicPotential build_potential(const PotentialSpec& spec) {
  PeriodicPotential base = [&]() {
    if (spec.kind == "free") return PeriodicPotential::free_potential(spec.period);
    if (spec.kind == "cosine") return PeriodicPotential::cosine(spec.amplitude, spec.period);
    const auto rows = read_csv_pairs(spec.table_path);
    std::vector<double> xs, vs;
    xs.reserve(rows.size());
    vs.reserve(rows.size());
    for (const auto& [x, v] : rows) {
      xs.push_back(x);
      vs.push_back(v);
    }
    return PeriodicPotential::table(std::move(xs), std::move(vs), spec.period);
  }();
  return spec.shift != 0.0 ? base.shifted(spec.shift) : base;
}

std::function<Complex(double)> build_perturbation(const PerturbationSpec& spec, double length,
                                                  int n, std::uint64_t seed) {
  const Complex amp(spec.amplitude_re, spec.amplitude_im);
  const double eps = spec.epsilon;
  if (spec.kind == "bump") {
    const double c = spec.center, w = spec.width;
    return [amp, eps, c, w](double x) {
      const double u = (x - c) / w;
      return eps * amp * std::exp(-u * u);
    };
  }
  if (spec.kind == "random") {
    // Piecewise-constant random values on the support window, fixed by seed.
    const double lo = spec.center - spec.width, hi = spec.center + spec.width;
    const double h = length / static_cast<double>(n);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Complex> values(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    for (int j = 0; j < n; ++j) {
      const double x = h * static_cast<double>(j);
      if (x >= lo && x <= hi) values[static_cast<std::size_t>(j)] = Complex(unit(rng), unit(rng));
    }
    return [amp, eps, values, h](double x) {
      const auto j = static_cast<std::size_t>(std::llround(x / h));
      return j < values.size() ? eps * amp * values[j] : Complex(0.0, 0.0);
    };
  }
  // table: CSV rows (x, re, im), nearest-abscissa lookup with linear interpolation
  std::ifstream in(spec.table_path);
  if (!in) throw ConfigError("cannot open perturbation table " + spec.table_path);
  std::vector<double> xs;
  std::vector<Complex> vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x, re, im;
    if (ss >> x >> re >> im) {
      xs.push_back(x);
      vs.emplace_back(re, im);
    }
  }
  if (xs.size() < 2) throw ConfigError("perturbation table needs at least two rows");
  return [amp, eps, xs = std::move(xs), vs = std::move(vs)](double x) -> Complex {
    if (x <= xs.front()) return eps * amp * vs.front();
    if (x >= xs.back()) return eps * amp * vs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return eps * amp * (vs[lo] + t * (vs[hi] - vs[lo]));
  };
}

// Discretization error of the second-order scheme blurs bands by O(h^2 E^2);
// the filter tolerance grows accordingly so band leakage is never counted as
// discrete spectrum.
double filter_tol(double base, double re) {
  return base * std::max(1.0, re * re / 12.0);
}

}  // namespace

nlohmann::json report_to_json(const LtReport& report) {
  nlohmann::json j;
  j["bands"] = band_set_to_json(report.bands);
  j["shift_c"] = report.shift_c;
  j["exponents"] = {{"p", report.pack.p},
                    {"d", report.pack.d},
                    {"tau", report.pack.tau},
                    {"q", report.pack.q()},
                    {"alpha", report.pack.alpha()}};
  j["omega0_magnitude"] = report.s0;
  j["v0_sup"] = report.v0_sup;
  j["v_norm_p"] = report.v_norm_p;
  auto complex_rows = [](const std::vector<Complex>& zs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& z : zs) arr.push_back(nlohmann::json::array({z.real(), z.imag()}));
    return arr;
  };
  j["eigenvalues"] = complex_rows(report.eigenvalues_full);
  j["discrete_candidates"] = complex_rows(report.discrete_candidates);
  j["filter"] = {{"base_tol", report.filter_base_tol}, {"window_max", report.window_max}};
  j["lt_sum_thm1"] = report.lt_sum_thm1;
  j["lt_sum_prop1"] = report.lt_sum_prop1;
  j["rhs_scale_thm1"] = report.rhs_scale_thm1;
  j["rhs_scale_prop1"] = report.rhs_scale_prop1;
  j["empirical_constant_thm1"] =
      report.empirical_constant_thm1 ? nlohmann::json(*report.empirical_constant_thm1)
                                     : nlohmann::json(nullptr);
  j["empirical_constant_prop1"] =
      report.empirical_constant_prop1 ? nlohmann::json(*report.empirical_constant_prop1)
                                      : nlohmann::json(nullptr);
  j["corollary"] = {{"sum", report.corollary_sum},
                    {"scale_c1", report.corollary_scale_c1},
                    {"scale_c2", report.corollary_scale_c2}};
  nlohmann::json chain = nlohmann::json::array();
  for (const ChainEntry& entry : report.chain)
    chain.push_back({{"z", nlohmann::json::array({entry.z.real(), entry.z.imag()})},
                     {"lhs", entry.lhs},
                     {"rhs", entry.rhs}});
  j["consistency_chain"] = {{"entries", chain},
                            {"max_violation", report.chain_max_violation},
                            {"holds", report.chain_holds}};
  j["near_cluster_pairs"] = report.near_cluster_pairs;
  j["provenance"] = {
      {"config_hash", report.config_hash}, {"seed", report.seed}, {"version", kVersion}};
  return j;
}

LtReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const PeriodicPotential raw_potential = build_potential(cfg.potential);

  BandComputation bc =
      band_edges(raw_potential, cfg.band_e_min, cfg.band_e_max, cfg.band_count,
                 BandSearchOptions{.steps = cfg.band_steps});
  const PeriodicPotential potential = raw_potential.shifted(bc.shift_c);

  const auto v = build_perturbation(cfg.perturbation, cfg.length(), cfg.n, cfg.seed);
  const DiscretizedOperator op = discretize(potential, v, cfg.n, cfg.length());
  const EigenDecomposition decomposition = eigenvalues_checked(op.hamiltonian());

  LtReport report{.bands = bc.set};
  report.shift_c = bc.shift_c;
  report.pack = cfg.exponents;
  report.seed = cfg.seed;
  report.config_hash = canonical_hash(config_to_json(cfg));
  report.v0_sup = potential.sup_norm();
  report.v_norm_p = op.v_norm(cfg.exponents.p);
  report.s0 =
      omega0(cfg.exponents.p, cfg.exponents.d, bc.set.first_edge(), report.v0_sup,
             report.v_norm_p)
          .magnitude();
  report.eigenvalues_full = decomposition.values;

  // Discrete-spectrum candidates: off the bands beyond the blur tolerance and
  // inside the truncation-valid window.
  report.filter_base_tol = 5.0 * op.h * op.h;
  report.window_max = bc.set.last_edge();
  for (const Complex& z : decomposition.values) {
    if (z.real() >= report.window_max) continue;
    if (dist_to_bands(z, bc.set) > filter_tol(report.filter_base_tol, z.real()))
      report.discrete_candidates.push_back(z);
  }

  const double p = cfg.exponents.p;
  const double d_half_tau = static_cast<double>(cfg.exponents.d) / 2.0 + cfg.exponents.tau;
  report.lt_sum_thm1 =
      lt_sum_weighted(report.discrete_candidates, bc.set, cfg.exponents, report.s0);
  report.lt_sum_prop1 = lt_sum_resolvent(report.discrete_candidates, bc.set, cfg.exponents,
                                         -report.s0, report.s0);
  report.rhs_scale_thm1 = std::pow(report.v_norm_p, p) / std::pow(report.s0, cfg.exponents.tau);
  report.rhs_scale_prop1 =
      std::pow(report.v_norm_p, p) / std::pow(report.s0, (cfg.exponents.q() + 1.0) * p);
  if (report.v_norm_p > 0.0) {
    report.empirical_constant_thm1 = report.lt_sum_thm1 / report.rhs_scale_thm1;
    report.empirical_constant_prop1 = report.lt_sum_prop1 / report.rhs_scale_prop1;
  }

  for (const Complex& z : report.discrete_candidates) {
    const double dist = dist_to_bands(z, bc.set);
    report.corollary_sum += std::pow(dist, p) / std::pow(1.0 + std::abs(z), d_half_tau);
  }
  report.corollary_scale_c1 = std::pow(1.0 + report.s0, cfg.exponents.d / 2.0) *
                              std::pow(report.v_norm_p, p);
  report.corollary_scale_c2 =
      std::pow((1.0 + report.v0_sup) * (1.0 + report.v_norm_p),
               cfg.exponents.d / (2.0 * cfg.exponents.q())) *
      std::pow(report.v_norm_p, p);

  // Per-eigenvalue consistency chain: the s-integral dominates
  // 3^{-p} B(alpha+1, d/2+tau) / (s0+|z|)^{d/2+tau}.
  for (const Complex& z : report.discrete_candidates) {
    const SIntegralCheck check =
        s_integral_check(std::abs(z), bc.set.first_edge(), report.s0, cfg.exponents);
    report.chain.push_back({z, check.lhs, check.rhs});
    const double violation = check.rhs > 0.0 ? (check.rhs - check.lhs) / check.rhs : 0.0;
    report.chain_max_violation = std::max(report.chain_max_violation, violation);
  }
  report.chain_holds = report.chain_max_violation <= 1e-8;

  const auto& zs = report.discrete_candidates;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t k = i + 1; k < zs.size(); ++k)
      if (std::abs(zs[i] - zs[k]) < 1e-6) ++report.near_cluster_pairs;

  if (!cfg.report_path.empty())
    write_text_file(cfg.report_path, canonical_dump(report_to_json(report)));
  if (!cfg.eigenvalues_csv.empty()) {
    std::string csv = "re,im\n";
    char buf[80];
    for (const Complex& z : report.eigenvalues_full) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z.real(), z.imag());
      csv += buf;
    }
    write_text_file(cfg.eigenvalues_csv, csv);
  }
  if (!cfg.bands_csv.empty()) {
    std::string csv = "a,b\n";
    char buf[80];
    for (const Band& band : report.bands.bands()) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", band.lo, band.hi);
      csv += buf;
    }
    write_text_file(cfg.bands_csv, csv);
  }
  return report;
}

nlohmann::json sweep_to_json(const SweepReport& sweep) {
  nlohmann::json j;
  j["epsilons"] = sweep.epsilons;
  nlohmann::json reports = nlohmann::json::array();
  for (const LtReport& r : sweep.reports) reports.push_back(report_to_json(r));
  j["reports"] = reports;
  j["loglog_slope"] =
      sweep.loglog_slope ? nlohmann::json(*sweep.loglog_slope) : nlohmann::json(nullptr);
  j["slope_expectation_met"] = sweep.slope_expectation_met
                                   ? nlohmann::json(*sweep.slope_expectation_met)
                                   : nlohmann::json(nullptr);
  j["empirical_constant_min"] = sweep.empirical_constant_min
                                    ? nlohmann::json(*sweep.empirical_constant_min)
                                    : nlohmann::json(nullptr);
  j["empirical_constant_max"] = sweep.empirical_constant_max
                                    ? nlohmann::json(*sweep.empirical_constant_max)
                                    : nlohmann::json(nullptr);
  return j;
}

SweepReport epsilon_sweep(const ExperimentConfig& cfg, const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw ConfigError("sweep: epsilon list must be nonempty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw ConfigError("sweep: epsilons must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw ConfigError("sweep: epsilons must be strictly descending");
  }

  SweepReport sweep;
  sweep.epsilons = epsilons;
  std::vector<std::future<LtReport>> futures;
  futures.reserve(epsilons.size());
  for (double eps : epsilons) {
    ExperimentConfig per = cfg;
    per.perturbation.epsilon = eps;
    // Per-epsilon outputs would collide; the sweep report carries everything.
    per.report_path.clear();
    per.eigenvalues_csv.clear();
    per.bands_csv.clear();
    futures.push_back(std::async(std::launch::async, [per]() { return run_experiment(per); }));
  }
  for (auto& f : futures) sweep.reports.push_back(f.get());

  // Log-log slope of lt_sum_thm1 against epsilon over entries with positive sums.
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < epsilons.size(); ++i)
    if (sweep.reports[i].lt_sum_thm1 > 0.0)
      points.emplace_back(std::log(epsilons[i]), std::log(sweep.reports[i].lt_sum_thm1));
  if (points.size() >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : points) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(points.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    sweep.loglog_slope = slope;
    sweep.slope_expectation_met = slope >= cfg.exponents.p - 0.5;
  }

  for (const LtReport& r : sweep.reports) {
    if (!r.empirical_constant_thm1) continue;
    const double c = *r.empirical_constant_thm1;
    sweep.empirical_constant_min =
        sweep.empirical_constant_min ? std::min(*sweep.empirical_constant_min, c) : c;
    sweep.empirical_constant_max =
        sweep.empirical_constant_max ? std::max(*sweep.empirical_constant_max, c) : c;
  }
  return sweep;
}

}  // namespace bandlab
