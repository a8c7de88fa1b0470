// hyperepp command-line interface.
//
// Subcommands: epp, dispersive, nbsa, sweep, ff, factorize, baseline.
// A JSON config file (--config) supplies defaults; flags override it.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperepp/report_io.hpp"
#include "hyperepp/scenario.hpp"

namespace {

using hyperepp::ScenarioConfig;

int fail_validation(const std::string& message) {
  std::cerr << nlohmann::json{
                   {"error",
                    {{"code", "validation"}, {"message", message}}}}
                   .dump()
            << "\n";
  return 2;
}

// The config file must be loaded before CLI11 binds flag values, so that
// flags passed on the command line win.
int preload_config(int argc, char** argv, ScenarioConfig& config) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    } else {
      continue;
    }
    std::ifstream in(path);
    if (!in) return fail_validation("cannot open config file: " + path);
    nlohmann::json file;
    try {
      in >> file;
      hyperepp::load_config_file(config, file);
    } catch (const std::exception& e) {
      return fail_validation(e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  ScenarioConfig config;
  if (const int rc = preload_config(argc, argv, config); rc != 0) return rc;

  CLI::App app{"deterministic hyperentanglement purification simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string mode_name = "exhaustive";
  std::string format_name;
  std::string nbsa_input_name;
  std::string fluct_model = "constant";
  std::vector<double> series;
  std::string compensation_name = "on";
  bool nbsa_table = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", config.out_path, "output path (default stdout)");
    cmd->add_option("--format", format_name, "json|csv|text");
    cmd->add_option("--seed", config.seed, "RNG seed (sampled mode)");
    cmd->add_option("--trials", config.trials, "trial count (sampled mode)");
  };
  auto add_noise = [&](CLI::App* cmd) {
    cmd->add_option("--a", config.noise.a, "Phi+ weight");
    cmd->add_option("--b", config.noise.b, "Phi- weight");
    cmd->add_option("--c", config.noise.c, "Psi+ weight");
    cmd->add_option("--d", config.noise.d, "Psi- weight");
    cmd->add_option("--dphi-s", config.noise.dphi_s,
                    "spatial phase dispersion (rad)");
    cmd->add_option("--dphi-f", config.noise.dphi_f,
                    "frequency phase dispersion (rad)");
  };

  CLI::App* epp = app.add_subcommand("epp", "run the purification pipeline");
  add_common(epp);
  add_noise(epp);
  epp->add_option("--mode", mode_name, "exhaustive|sampled");
  epp->add_option("--dump-final-state", config.dump_final_state_path,
                  "write the mixed final state as a JSON state dump");

  CLI::App* dispersive = app.add_subcommand(
      "dispersive", "purification under phase dispersion");
  add_common(dispersive);
  add_noise(dispersive);
  dispersive->add_option("--mode", mode_name, "exhaustive|sampled");
  dispersive->add_option("--compensation", compensation_name, "on|off");
  dispersive->add_option("--dump-final-state", config.dump_final_state_path,
                         "write the mixed final state as a JSON state dump");

  CLI::App* nbsa =
      app.add_subcommand("nbsa", "nonlocal Bell-state analysis");
  add_common(nbsa);
  nbsa->add_flag("--table", nbsa_table, "emit the full truth table");
  nbsa->add_option("--input", nbsa_input_name,
                   "classify one input: phi+|phi-|psi+|psi-");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "dispersion sweep comparing formula and simulation");
  add_common(sweep);
  add_noise(sweep);
  sweep->add_option("--param", config.sweep.param, "dphi_s|dphi_f");
  sweep->add_option("--from", config.sweep.from, "sweep start (rad)");
  sweep->add_option("--to", config.sweep.to, "sweep end (rad)");
  sweep->add_option("--steps", config.sweep.steps, "number of grid points");

  CLI::App* ff =
      app.add_subcommand("ff", "time-averaged F_f for fluctuating dphi_f");
  add_common(ff);
  ff->add_option("--model", fluct_model, "constant|uniform|sinusoid|series");
  ff->add_option("--base", config.fluctuation.base, "dphi_f(0) (rad)");
  ff->add_option("--delta", config.fluctuation.delta,
                 "uniform jitter half-width (rad)");
  ff->add_option("--amplitude", config.fluctuation.amplitude,
                 "sinusoid amplitude (rad)");
  ff->add_option("--period", config.fluctuation.period, "sinusoid period");
  ff->add_option("--horizon", config.fluctuation.horizon, "time horizon T");
  ff->add_option("--samples", config.fluctuation.samples,
                 "integration grid size");
  ff->add_option("--series", series, "dphi_f(t) samples over [0, T]")
      ->delimiter(',');

  CLI::App* factorize = app.add_subcommand(
      "factorize", "exact vs factorized transmission phases");
  add_common(factorize);
  factorize->add_option("--la1", config.geometry.l_a1, "length of a1 (m)");
  factorize->add_option("--la2", config.geometry.l_a2, "length of a2 (m)");
  factorize->add_option("--lb1", config.geometry.l_b1, "length of b1 (m)");
  factorize->add_option("--lb2", config.geometry.l_b2, "length of b2 (m)");
  factorize->add_option("--omega1", config.geometry.omega1, "omega_1 (rad/s)");
  factorize->add_option("--omega2", config.geometry.omega2, "omega_2 (rad/s)");
  factorize->add_option("--v", config.geometry.v, "propagation speed (m/s)");

  CLI::App* baseline = app.add_subcommand(
      "baseline", "conventional recursive purification comparator");
  add_common(baseline);
  baseline->add_option("--f0", config.baseline.f0, "initial fidelity");
  baseline->add_option("--f-target", config.baseline.f_target,
                       "target fidelity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << nlohmann::json{
                     {"error",
                      {{"code", "usage"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 2;
  }

  for (CLI::App* cmd :
       {epp, dispersive, nbsa, sweep, ff, factorize, baseline}) {
    if (cmd->parsed()) config.command = cmd->get_name();
  }

  try {
    if (!format_name.empty()) {
      config.format = hyperepp::format_from_name(format_name);
    }
    if (mode_name == "exhaustive") {
      config.mode = hyperepp::RunMode::kExhaustive;
    } else if (mode_name == "sampled") {
      config.mode = hyperepp::RunMode::kSampled;
    } else {
      return fail_validation("unknown mode: " + mode_name);
    }
    if (compensation_name == "on") {
      config.compensation = true;
    } else if (compensation_name == "off") {
      config.compensation = false;
    } else {
      return fail_validation("compensation must be on or off");
    }
    if (!nbsa_input_name.empty()) {
      config.nbsa_input = hyperepp::bell_from_name(nbsa_input_name);
    }
    if (config.command == "ff") {
      using Model = hyperepp::FluctuationSpec::Model;
      if (fluct_model == "constant") {
        config.fluctuation.model = Model::kConstant;
      } else if (fluct_model == "uniform") {
        config.fluctuation.model = Model::kUniformJitter;
      } else if (fluct_model == "sinusoid") {
        config.fluctuation.model = Model::kSinusoid;
      } else if (fluct_model == "series") {
        config.fluctuation.model = Model::kUserSeries;
      } else {
        return fail_validation("unknown fluctuation model: " + fluct_model);
      }
      if (!series.empty()) config.fluctuation.series = series;
    }
  } catch (const std::exception& e) {
    return fail_validation(e.what());
  }

  return hyperepp::run_scenario(config, std::cout, std::cerr);
}
