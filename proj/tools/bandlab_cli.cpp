// Command line driver: band computation, distortion verification, spectra,
// weighted eigenvalue sums, closed-form constants, and epsilon sweeps.
// Exit code 0 only when every asserted inequality holds.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bandlab/distortion.hpp"
#include "bandlab/experiment.hpp"
#include "bandlab/json_io.hpp"
#include "bandlab/kernels/band_kernels.hpp"
#include "bandlab/spectral_constants.hpp"

namespace {

using bandlab::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bandlab::ConfigError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& path) {
  const std::string text = bandlab::canonical_dump(j);
  if (path.empty())
    std::cout << text;
  else
    bandlab::write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"band spectra, distortion bounds and weighted eigenvalue sums"};
  app.require_subcommand(1);

  std::string config_path, out_path, bands_path, kernel_choice;
  app.add_option("--kernel", kernel_choice, "force kernel ISA (scalar|avx2)");

  auto* bands_cmd = app.add_subcommand("bands", "compute band edges for a potential");
  bands_cmd->add_option("--config", config_path, "experiment config JSON")->required();
  bands_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* dist_cmd = app.add_subcommand("distortion-check", "verify the distortion bounds");
  double omega = 0.0, re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  long long samples = 100000;
  std::uint64_t seed = 1;
  dist_cmd->add_option("--bands", bands_path, "band set JSON (array of [a,b])")->required();
  dist_cmd->add_option("--omega", omega, "Moebius shift, must be < a_1")->required();
  dist_cmd->add_option("--re-min", re_min)->required();
  dist_cmd->add_option("--re-max", re_max)->required();
  dist_cmd->add_option("--im-min", im_min)->required();
  dist_cmd->add_option("--im-max", im_max)->required();
  dist_cmd->add_option("--n", samples, "sample count");
  dist_cmd->add_option("--seed", seed, "sampling seed");
  dist_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the discretized model");
  spectrum_cmd->add_option("--config", config_path, "experiment config JSON")->required();
  spectrum_cmd->add_option("--out", out_path, "CSV output path (stdout if omitted)");

  auto* ltsum_cmd = app.add_subcommand("ltsum", "full experiment report");
  ltsum_cmd->add_option("--config", config_path, "experiment config JSON")->required();
  ltsum_cmd->add_option("--out", out_path, "report path (stdout if omitted)");

  auto* constants_cmd = app.add_subcommand("constants", "closed-form constants");
  double p = 2.0, tau = 1.0, a1 = 1.0, v0_sup = 0.0, v_norm = 0.0;
  int d = 1;
  constants_cmd->add_option("--p", p)->required();
  constants_cmd->add_option("--d", d)->required();
  constants_cmd->add_option("--tau", tau);
  constants_cmd->add_option("--a1", a1);
  constants_cmd->add_option("--v0-sup", v0_sup);
  constants_cmd->add_option("--v-norm", v_norm);
  constants_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* sweep_cmd = app.add_subcommand("sweep", "epsilon sweep of the experiment");
  std::vector<double> epsilons;
  sweep_cmd->add_option("--config", config_path, "experiment config JSON")->required();
  sweep_cmd->add_option("--epsilons", epsilons, "descending positive scales")->required();
  sweep_cmd->add_option("--out", out_path, "sweep report path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!kernel_choice.empty()) {
      if (kernel_choice == "scalar")
        bandlab::kernels::set_isa(bandlab::kernels::Isa::scalar);
      else if (kernel_choice == "avx2")
        bandlab::kernels::set_isa(bandlab::kernels::Isa::avx2);
      else
        throw bandlab::ConfigError("unknown kernel: " + kernel_choice);
    }

    if (bands_cmd->parsed()) {
      const auto cfg = bandlab::config_from_json(load_json(config_path));
      const auto potential = [&cfg]() {
        if (cfg.potential.kind == "free")
          return bandlab::PeriodicPotential::free_potential(cfg.potential.period);
        if (cfg.potential.kind == "cosine")
          return bandlab::PeriodicPotential::cosine(cfg.potential.amplitude,
                                                    cfg.potential.period);
        throw bandlab::ConfigError("bands: use ltsum for table potentials");
      }();
      const auto bc = bandlab::band_edges(potential, cfg.band_e_min, cfg.band_e_max,
                                          cfg.band_count,
                                          bandlab::BandSearchOptions{.steps = cfg.band_steps});
      json j;
      j["bands"] = bandlab::band_set_to_json(bc.set);
      j["shift_c"] = bc.shift_c;
      j["bands_found"] = bc.bands_found;
      j["max_det_drift"] = bc.max_det_drift;
      emit(j, out_path);
      return 0;
    }

    if (dist_cmd->parsed()) {
      const bandlab::BandSet set = bandlab::band_set_from_json(load_json(bands_path));
      const bandlab::DistortionReport report = bandlab::verify_distortion(
          set, omega, bandlab::Rect{re_min, re_max, im_min, im_max}, samples, seed);
      emit(bandlab::distortion_report_to_json(report), out_path);
      return report.pass() ? 0 : 1;
    }

    if (spectrum_cmd->parsed()) {
      auto cfg = bandlab::config_from_json(load_json(config_path));
      cfg.report_path.clear();
      cfg.bands_csv.clear();
      cfg.eigenvalues_csv.clear();
      const bandlab::LtReport report = bandlab::run_experiment(cfg);
      std::string csv = "re,im\n";
      char buf[80];
      for (const bandlab::Complex& z : report.eigenvalues_full) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z.real(), z.imag());
        csv += buf;
      }
      if (out_path.empty())
        std::cout << csv;
      else
        bandlab::write_text_file(out_path, csv);
      return 0;
    }

    if (ltsum_cmd->parsed()) {
      auto cfg = bandlab::config_from_json(load_json(config_path));
      if (!out_path.empty()) cfg.report_path = out_path;
      const bandlab::LtReport report = bandlab::run_experiment(cfg);
      if (cfg.report_path.empty()) emit(bandlab::report_to_json(report), "");
      return report.chain_holds ? 0 : 1;
    }

    if (constants_cmd->parsed()) {
      const bandlab::ExponentPack pack{p, d, tau};
      pack.validate();
      json j;
      j["p"] = p;
      j["d"] = d;
      j["q"] = pack.q();
      j["tau"] = tau;
      j["alpha"] = pack.alpha();
      j["eta"] = bandlab::eta(p, d);
      j["c_integral"] = bandlab::c_integral(p, d);
      j["omega0_magnitude"] = bandlab::omega0(p, d, a1, v0_sup, v_norm).magnitude();
      j["weight_integral"] = bandlab::weight_integral(pack.alpha(), p);
      emit(j, out_path);
      return 0;
    }

    if (sweep_cmd->parsed()) {
      const auto cfg = bandlab::config_from_json(load_json(config_path));
      const bandlab::SweepReport sweep = bandlab::epsilon_sweep(cfg, epsilons);
      emit(bandlab::sweep_to_json(sweep), out_path);
      for (const bandlab::LtReport& r : sweep.reports)
        if (!r.chain_holds) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
