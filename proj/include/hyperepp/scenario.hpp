#pragma once
// Command-line front end: scenario configuration, deterministic seeding,
// dispatch into the simulation modules and JSON/CSV/plain-text report
// emission. Identical (config, seed) inputs produce byte-identical output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "hyperepp/epp.hpp"
#include "hyperepp/fluctuation.hpp"
#include "hyperepp/practical.hpp"

namespace hyperepp {

enum class OutputFormat { kJson, kCsv, kText };

struct SweepSpec {
  std::string param = "dphi_s";  // or "dphi_f"
  double from = 0.0;
  double to = 3.141592653589793;
  int steps = 13;
};

struct BaselineSpec {
  double f0 = 0.75;
  double f_target = 0.98;
};

struct ScenarioConfig {
  std::string command;  // epp | dispersive | nbsa | sweep | ff | factorize | baseline
  NoiseModel noise;
  RunMode mode = RunMode::kExhaustive;
  std::uint64_t seed = 0;
  std::int64_t trials = 10000;
  bool compensation = true;                   // dispersive
  std::optional<BellLabel> nbsa_input;        // nbsa: classify one input
  FluctuationSpec fluctuation;                // ff
  FiberGeometry geometry;                     // factorize
  SweepSpec sweep;
  BaselineSpec baseline;
  std::string out_path;  // empty -> stdout
  std::optional<OutputFormat> format;         // default depends on command
  std::string dump_final_state_path;          // epp/dispersive: state dump
};

OutputFormat format_from_name(const std::string& name);

// Populates config fields from a JSON config file with top-level keys
// {noise, fluctuation, geometry, baseline, output}; unknown keys are
// rejected. Command-line flags override these values.
void load_config_file(ScenarioConfig& config, const nlohmann::json& file);

// Executes the configured scenario. The report goes to `out` or to the
// configured path (written atomically; error paths leave no partial file).
// Validation failures print one machine-readable JSON error line to `err`
// and return 2; unexpected failures return 1.
int run_scenario(const ScenarioConfig& config, std::ostream& out,
                 std::ostream& err);

}  // namespace hyperepp
