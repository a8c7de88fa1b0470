#include "hyperepp/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "hyperepp/baseline.hpp"
#include "hyperepp/nbsa.hpp"
#include "hyperepp/report_io.hpp"

namespace hyperepp {

namespace {

OutputFormat default_format(const std::string& command) {
  if (command == "sweep" || command == "baseline") return OutputFormat::kCsv;
  return OutputFormat::kJson;
}

// Writes through a temporary so a failure never leaves a partial file.
void atomic_write(const std::string& payload, const std::string& path) {
  const std::filesystem::path target(path);
  const std::filesystem::path tmp(path + ".tmp");
  {
    std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw std::invalid_argument("cannot open output path: " + path);
    }
    stream << payload;
    if (!stream.flush()) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing output: " + path);
    }
  }
  std::filesystem::rename(tmp, target);
}

void write_output(const std::string& payload, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  atomic_write(payload, path);
}

RunOptions run_options(const ScenarioConfig& config) {
  RunOptions opts;
  opts.mode = config.mode;
  opts.seed = config.seed;
  opts.trials = config.trials;
  return opts;
}

Json epp_envelope(const ScenarioConfig& config,
                  const PurificationReport& report) {
  Json envelope{{"command", config.command},
                {"noise", noise_to_json(config.noise)},
                {"seed", config.seed},
                {"report", report_to_json(report)}};
  if (config.command == "dispersive") {
    envelope["compensation"] = config.compensation;
  }
  return envelope;
}

std::string render_epp(const ScenarioConfig& config,
                       const PurificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kCsv:
      return report_to_csv(report);
    case OutputFormat::kText: {
      std::string text = "target " + bell_name(report.target) + "\n";
      text += "total_probability " +
              format_double(report.total_probability) + "\n";
      text += "min_final_fidelity " +
              format_double(report.min_final_fidelity) + "\n";
      text += "max_final_fidelity " +
              format_double(report.max_final_fidelity) + "\n";
      text += "post_bitflip_fidelity " +
              format_double(report.post_bitflip_fidelity) + "\n";
      return text;
    }
    case OutputFormat::kJson:
      break;
  }
  return epp_envelope(config, report).dump(2) + "\n";
}

DensityMatrix weighted_final_state(const PurificationReport& report) {
  Matrix mix = Matrix::Zero(kDim, kDim);
  for (const EppBranch& leaf : report.branches) {
    mix += leaf.probability * leaf.final_state.matrix();
  }
  return DensityMatrix(std::move(mix));
}

std::string run_epp_command(const ScenarioConfig& config,
                            OutputFormat format) {
  const PurificationReport report =
      config.command == "dispersive"
          ? dispersive_epp_run(config.noise, config.compensation,
                               run_options(config))
          : run_epp(config.noise, run_options(config));
  if (!config.dump_final_state_path.empty()) {
    atomic_write(state_to_json(weighted_final_state(report)).dump(2) + "\n",
                 config.dump_final_state_path);
  }
  return render_epp(config, report, format);
}

std::string run_nbsa_command(const ScenarioConfig& config,
                             OutputFormat format) {
  if (config.nbsa_input) {
    const NbsaResult result = nbsa_classify(*config.nbsa_input);
    Json j{{"command", "nbsa"},
           {"input", bell_name(*config.nbsa_input)},
           {"classified", bell_name(result.classified)},
           {"round1_equal", result.record.round1_equal},
           {"round2_equal", result.record.round2_equal},
           {"operations", result.record.operations}};
    if (format == OutputFormat::kText) {
      return bell_name(*config.nbsa_input) + " -> " +
             bell_name(result.classified) + "\n";
    }
    return j.dump(2) + "\n";
  }
  const auto table = nbsa_truth_table();
  if (format == OutputFormat::kText) return truth_table_to_text(table);
  return truth_table_to_json(table).dump(2) + "\n";
}

std::string run_sweep_command(const ScenarioConfig& config,
                              OutputFormat format) {
  const SweepSpec& sweep = config.sweep;
  if (sweep.steps < 1) {
    throw std::invalid_argument("sweep needs at least one step");
  }
  if (sweep.param != "dphi_s" && sweep.param != "dphi_f") {
    throw std::invalid_argument("sweep parameter must be dphi_s or dphi_f");
  }

  struct Row {
    NoiseModel noise;
    double formula, simulated;
  };
  std::vector<Row> rows;
  for (int i = 0; i < sweep.steps; ++i) {
    const double x =
        sweep.steps == 1
            ? sweep.from
            : sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
    NoiseModel n = config.noise;
    double formula = 0.0;
    double simulated = 0.0;
    if (sweep.param == "dphi_s") {
      n.dphi_s = x;
      formula = bitflip_fidelity_formula(n.a, n.b, n.c, n.d, x);
      simulated = simulated_bitflip_fidelity(n);
    } else {
      n.dphi_f = x;
      formula = 0.5 * (1.0 + std::cos(x));
      const PurificationReport report = dispersive_epp_run(n, false);
      for (const EppBranch& leaf : report.branches) {
        simulated += leaf.probability * leaf.fidelity;
      }
    }
    rows.push_back(Row{n, formula, simulated});
  }

  if (format == OutputFormat::kJson) {
    Json arr = Json::array();
    for (const Row& row : rows) {
      arr.push_back(Json{{"a", row.noise.a},
                         {"b", row.noise.b},
                         {"c", row.noise.c},
                         {"d", row.noise.d},
                         {"dphi_s", row.noise.dphi_s},
                         {"dphi_f", row.noise.dphi_f},
                         {"F_formula", row.formula},
                         {"F_simulated", row.simulated},
                         {"abs_error", std::abs(row.formula - row.simulated)}});
    }
    return Json{{"command", "sweep"}, {"rows", std::move(arr)}}.dump(2) + "\n";
  }
  std::string csv =
      "a,b,c,d,dphi_s,dphi_f,F_formula,F_simulated,abs_error\n";
  for (const Row& row : rows) {
    csv += format_double(row.noise.a);
    csv += ',' + format_double(row.noise.b);
    csv += ',' + format_double(row.noise.c);
    csv += ',' + format_double(row.noise.d);
    csv += ',' + format_double(row.noise.dphi_s);
    csv += ',' + format_double(row.noise.dphi_f);
    csv += ',' + format_double(row.formula);
    csv += ',' + format_double(row.simulated);
    csv += ',' + format_double(std::abs(row.formula - row.simulated));
    csv += '\n';
  }
  return csv;
}

std::string run_ff_command(const ScenarioConfig& config, OutputFormat format) {
  const FfResult result = time_avg_ff(config.fluctuation);
  if (format == OutputFormat::kText) {
    return "F_f " + format_double(result.ff) + "\n";
  }
  Json j = ff_to_json(config.fluctuation, result);
  j["command"] = "ff";
  return j.dump(2) + "\n";
}

std::string run_factorize_command(const ScenarioConfig& config,
                                  OutputFormat format) {
  const FactorizationResult result = factorization_overlap(config.geometry);
  if (format == OutputFormat::kText) {
    return "overlap " + format_double(result.overlap) + "\nresidual_phase " +
           format_double(result.residual_phase) + "\ncondition_value " +
           format_double(result.condition_value) + "\n";
  }
  Json j = factorization_to_json(config.geometry, result);
  j["command"] = "factorize";
  return j.dump(2) + "\n";
}

std::string run_baseline_command(const ScenarioConfig& config,
                                 OutputFormat format) {
  const RecursionTrace trace =
      resource_compare(config.baseline.f0, config.baseline.f_target);
  if (format == OutputFormat::kJson) {
    Json j = trace_to_json(trace);
    j["command"] = "baseline";
    j["f0"] = config.baseline.f0;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::kText) {
    return "rounds " + std::to_string(trace.rounds.size()) +
           "\nexpected_pairs " +
           format_double(trace.pairs_consumed_expected) +
           "\ndeterministic_pairs 1\n";
  }
  return trace_to_csv(trace);
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw std::invalid_argument("unknown output format: " + name);
}

void load_config_file(ScenarioConfig& config, const nlohmann::json& file) {
  if (!file.is_object()) {
    throw std::invalid_argument("config file must be a JSON object");
  }
  for (const auto& [key, value] : file.items()) {
    if (key == "noise") {
      config.noise = noise_from_json(value);
    } else if (key == "fluctuation") {
      config.fluctuation = fluctuation_from_json(value);
    } else if (key == "geometry") {
      config.geometry = geometry_from_json(value);
    } else if (key == "baseline") {
      if (!value.is_object() ||
          !(value.contains("f0") || value.contains("f_target"))) {
        throw std::invalid_argument("baseline config needs f0/f_target");
      }
      for (const auto& [k2, v2] : value.items()) {
        if (k2 == "f0") {
          config.baseline.f0 = v2.get<double>();
        } else if (k2 == "f_target") {
          config.baseline.f_target = v2.get<double>();
        } else {
          throw std::invalid_argument("unknown key in baseline: " + k2);
        }
      }
    } else if (key == "output") {
      for (const auto& [k2, v2] : value.items()) {
        if (k2 == "path") {
          config.out_path = v2.get<std::string>();
        } else if (k2 == "format") {
          config.format = format_from_name(v2.get<std::string>());
        } else {
          throw std::invalid_argument("unknown key in output: " + k2);
        }
      }
    } else {
      throw std::invalid_argument("unknown key in config file: " + key);
    }
  }
}

int run_scenario(const ScenarioConfig& config, std::ostream& out,
                 std::ostream& err) {
  try {
    const OutputFormat format =
        config.format.value_or(default_format(config.command));
    std::string payload;
    if (config.command == "epp" || config.command == "dispersive") {
      payload = run_epp_command(config, format);
    } else if (config.command == "nbsa") {
      payload = run_nbsa_command(config, format);
    } else if (config.command == "sweep") {
      payload = run_sweep_command(config, format);
    } else if (config.command == "ff") {
      payload = run_ff_command(config, format);
    } else if (config.command == "factorize") {
      payload = run_factorize_command(config, format);
    } else if (config.command == "baseline") {
      payload = run_baseline_command(config, format);
    } else {
      throw std::invalid_argument("unknown command: " + config.command);
    }
    write_output(payload, config.out_path, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << Json{{"error", {{"code", "validation"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 2;
  } catch (const NonPurifiableError& e) {
    err << Json{{"error", {{"code", "non-purifiable"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << Json{{"error", {{"code", "internal"}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 1;
  }
}

}  // namespace hyperepp
