#include "hyperepp/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperepp {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const char* what) {
  if (!j.is_object()) {
    throw std::invalid_argument(std::string(what) + " must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument("unknown key in " + std::string(what) +
                                  ": " + key);
    }
  }
}

std::string outcome_phase(bool theta) { return theta ? "theta" : "0"; }

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

Json state_to_json(const DensityMatrix& rho) {
  Json re = Json::array();
  Json im = Json::array();
  const Matrix& m = rho.matrix();
  for (int i = 0; i < kDim; ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (int j = 0; j < kDim; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"basis", "v1"}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix state_from_json(const Json& j) {
  check_keys(j, {"basis", "re", "im"}, "state dump");
  if (!j.contains("basis") || j.at("basis") != "v1") {
    throw std::invalid_argument("state dump has an unknown basis tag");
  }
  const Json& re = j.at("re");
  const Json& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != kDim ||
      im.size() != kDim) {
    throw std::invalid_argument("state dump matrix has the wrong size");
  }
  Matrix m(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    const Json& re_row = re.at(i);
    const Json& im_row = im.at(i);
    if (re_row.size() != kDim || im_row.size() != kDim) {
      throw std::invalid_argument("state dump matrix has the wrong size");
    }
    for (int k = 0; k < kDim; ++k) {
      m(i, k) = Complex(re_row.at(k).get<double>(), im_row.at(k).get<double>());
    }
  }
  return DensityMatrix(std::move(m));
}

Json outcome_to_json(const QndOutcome& outcome, Stage stage) {
  return Json{{"alice", outcome_phase(outcome.alice_theta)},
              {"bob", outcome_phase(outcome.bob_theta)},
              {"mode", mode_name(outcome, stage)}};
}

Json report_to_json(const PurificationReport& report) {
  Json branches = Json::array();
  for (const EppBranch& leaf : report.branches) {
    Json entry{{"pauli_class", pauli_class_name(leaf.pauli_class)},
               {"step1", outcome_to_json(leaf.step1, Stage::kBitflip)},
               {"step2", outcome_to_json(leaf.step2, Stage::kPhaseflip)},
               {"corrections", leaf.corrections},
               {"probability", leaf.probability},
               {"fidelity", leaf.fidelity}};
    if (report.mode == RunMode::kSampled) entry["count"] = leaf.count;
    branches.push_back(std::move(entry));
  }
  Json out{{"target", bell_name(report.target)},
           {"mode",
            report.mode == RunMode::kExhaustive ? "exhaustive" : "sampled"},
           {"total_probability", report.total_probability},
           {"min_final_fidelity", report.min_final_fidelity},
           {"max_final_fidelity", report.max_final_fidelity},
           {"post_bitflip_fidelity", report.post_bitflip_fidelity},
           {"branches", std::move(branches)}};
  if (report.mode == RunMode::kSampled) {
    out["seed"] = report.seed;
    out["trials"] = report.trials;
  }
  return out;
}

std::string report_to_csv(const PurificationReport& report) {
  std::string csv =
      "pauli_class,step1_alice,step1_bob,step1_mode,step2_alice,step2_bob,"
      "step2_mode,corrections,probability,fidelity\n";
  for (const EppBranch& leaf : report.branches) {
    csv += pauli_class_name(leaf.pauli_class);
    csv += ',' + outcome_phase(leaf.step1.alice_theta);
    csv += ',' + outcome_phase(leaf.step1.bob_theta);
    csv += ',' + mode_name(leaf.step1, Stage::kBitflip);
    csv += ',' + outcome_phase(leaf.step2.alice_theta);
    csv += ',' + outcome_phase(leaf.step2.bob_theta);
    csv += ',' + mode_name(leaf.step2, Stage::kPhaseflip);
    csv += ',';
    for (std::size_t i = 0; i < leaf.corrections.size(); ++i) {
      if (i) csv += ';';
      csv += leaf.corrections[i];
    }
    csv += ',' + format_double(leaf.probability);
    csv += ',' + format_double(leaf.fidelity);
    csv += '\n';
  }
  return csv;
}

Json truth_table_to_json(const std::vector<TruthTableRow>& table) {
  Json rows = Json::array();
  for (const TruthTableRow& row : table) {
    Json branches = Json::array();
    for (const TruthTableBranch& b : row.branches) {
      branches.push_back(
          Json{{"round1", outcome_to_json(b.round1, Stage::kBitflip)},
               {"round2", outcome_to_json(b.round2, Stage::kPhaseflip)},
               {"probability", b.probability},
               {"post_pol_fidelity_phi_plus", b.post_pol_fidelity_phi_plus}});
    }
    rows.push_back(Json{{"input", bell_name(row.input)},
                        {"round1_equal", row.round1_equal},
                        {"round2_equal", row.round2_equal},
                        {"classified", bell_name(row.classified)},
                        {"branches", std::move(branches)}});
  }
  return Json{{"rows", std::move(rows)}};
}

std::string truth_table_to_text(const std::vector<TruthTableRow>& table) {
  std::ostringstream out;
  out << "input  round1   round2   classified\n";
  out << "-----  -------  -------  ----------\n";
  for (const TruthTableRow& row : table) {
    const auto pad = [](std::string s, std::size_t width) {
      s.resize(std::max(s.size(), width), ' ');
      return s;
    };
    out << pad(bell_name(row.input), 5) << "  "
        << pad(row.round1_equal ? "equal" : "unequal", 7) << "  "
        << pad(row.round2_equal ? "equal" : "unequal", 7) << "  "
        << bell_name(row.classified) << "\n";
  }
  return out.str();
}

Json ff_to_json(const FluctuationSpec& spec, const FfResult& result) {
  Json out = fluctuation_to_json(spec);
  out["F_f"] = result.ff;
  out["ensemble"] = Json{{"phi_plus_weight", result.ff},
                         {"phi_minus_weight", 1.0 - result.ff}};
  return out;
}

Json factorization_to_json(const FiberGeometry& geometry,
                           const FactorizationResult& result) {
  auto amplitudes = [](const Eigen::Vector4cd& v) {
    Json arr = Json::array();
    for (int i = 0; i < 4; ++i) {
      arr.push_back(Json{{"re", v(i).real()}, {"im", v(i).imag()}});
    }
    return arr;
  };
  return Json{{"geometry",
               {{"l_a1", geometry.l_a1},
                {"l_a2", geometry.l_a2},
                {"l_b1", geometry.l_b1},
                {"l_b2", geometry.l_b2},
                {"omega1", geometry.omega1},
                {"omega2", geometry.omega2},
                {"v", geometry.v}}},
              {"exact", amplitudes(result.exact)},
              {"factorized", amplitudes(result.factorized)},
              {"overlap", result.overlap},
              {"residual_phase", result.residual_phase},
              {"condition_value", result.condition_value}};
}

Json trace_to_json(const RecursionTrace& trace) {
  Json rounds = Json::array();
  for (const RecursionRound& r : trace.rounds) {
    rounds.push_back(Json{{"fidelity_before", r.fidelity_before},
                          {"fidelity_after", r.fidelity_after},
                          {"success_probability", r.success_probability}});
  }
  return Json{{"target_fidelity", trace.target_fidelity},
              {"rounds", std::move(rounds)},
              {"final_fidelity", trace.final_fidelity},
              {"pairs_consumed_expected", trace.pairs_consumed_expected},
              {"deterministic_pairs", trace.deterministic_pairs},
              {"deterministic_fidelity", trace.deterministic_fidelity}};
}

std::string trace_to_csv(const RecursionTrace& trace) {
  std::string csv =
      "round,F_before,F_after,p_success,cumulative_expected_pairs\n";
  double pairs = 1.0;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const RecursionRound& r = trace.rounds[i];
    pairs *= 2.0 / r.success_probability;
    csv += std::to_string(i + 1);
    csv += ',' + format_double(r.fidelity_before);
    csv += ',' + format_double(r.fidelity_after);
    csv += ',' + format_double(r.success_probability);
    csv += ',' + format_double(pairs);
    csv += '\n';
  }
  return csv;
}

namespace {

const char* fluctuation_model_name(FluctuationSpec::Model model) {
  switch (model) {
    case FluctuationSpec::Model::kConstant:
      return "constant";
    case FluctuationSpec::Model::kUniformJitter:
      return "uniform";
    case FluctuationSpec::Model::kSinusoid:
      return "sinusoid";
    case FluctuationSpec::Model::kUserSeries:
      return "series";
  }
  return "constant";
}

}  // namespace

Json noise_to_json(const NoiseModel& noise) {
  Json out{{"a", noise.a},       {"b", noise.b},
           {"c", noise.c},       {"d", noise.d},
           {"dphi_s", noise.dphi_s}, {"dphi_f", noise.dphi_f}};
  if (noise.fluctuation) {
    out["fluctuation"] = fluctuation_to_json(*noise.fluctuation);
  }
  return out;
}

Json fluctuation_to_json(const FluctuationSpec& spec) {
  Json out{{"model", fluctuation_model_name(spec.model)},
           {"base", spec.base},
           {"horizon", spec.horizon},
           {"samples", spec.samples}};
  switch (spec.model) {
    case FluctuationSpec::Model::kUniformJitter:
      out["delta"] = spec.delta;
      break;
    case FluctuationSpec::Model::kSinusoid:
      out["amplitude"] = spec.amplitude;
      out["period"] = spec.period;
      break;
    case FluctuationSpec::Model::kUserSeries:
      out["series"] = spec.series;
      break;
    case FluctuationSpec::Model::kConstant:
      break;
  }
  return out;
}

NoiseModel noise_from_json(const Json& j) {
  check_keys(j, {"a", "b", "c", "d", "dphi_s", "dphi_f", "fluctuation"},
             "noise");
  NoiseModel n;
  n.a = j.value("a", 1.0);
  n.b = j.value("b", 0.0);
  n.c = j.value("c", 0.0);
  n.d = j.value("d", 0.0);
  n.dphi_s = j.value("dphi_s", 0.0);
  n.dphi_f = j.value("dphi_f", 0.0);
  if (j.contains("fluctuation")) {
    n.fluctuation = fluctuation_from_json(j.at("fluctuation"));
  }
  n.validate();
  return n;
}

FluctuationSpec fluctuation_from_json(const Json& j) {
  check_keys(j,
             {"model", "base", "horizon", "samples", "delta", "amplitude",
              "period", "series"},
             "fluctuation");
  FluctuationSpec spec;
  const std::string model = j.value("model", "constant");
  if (model == "constant") {
    spec.model = FluctuationSpec::Model::kConstant;
  } else if (model == "uniform") {
    spec.model = FluctuationSpec::Model::kUniformJitter;
  } else if (model == "sinusoid") {
    spec.model = FluctuationSpec::Model::kSinusoid;
  } else if (model == "series") {
    spec.model = FluctuationSpec::Model::kUserSeries;
  } else {
    throw std::invalid_argument("unknown fluctuation model: " + model);
  }
  spec.base = j.value("base", 0.0);
  spec.horizon = j.value("horizon", 1.0);
  spec.samples = j.value("samples", 100000);
  spec.delta = j.value("delta", 0.0);
  spec.amplitude = j.value("amplitude", 0.0);
  spec.period = j.value("period", 1.0);
  if (j.contains("series")) {
    spec.series = j.at("series").get<std::vector<double>>();
  }
  spec.validate();
  return spec;
}

FiberGeometry geometry_from_json(const Json& j) {
  check_keys(j, {"l_a1", "l_a2", "l_b1", "l_b2", "omega1", "omega2", "v"},
             "geometry");
  FiberGeometry g;
  g.l_a1 = j.value("l_a1", 0.0);
  g.l_a2 = j.value("l_a2", 0.0);
  g.l_b1 = j.value("l_b1", 0.0);
  g.l_b2 = j.value("l_b2", 0.0);
  g.omega1 = j.value("omega1", 0.0);
  g.omega2 = j.value("omega2", 0.0);
  g.v = j.value("v", 1.0);
  g.validate();
  return g;
}

Json element_to_json(const ElementDescriptor& desc) {
  Json params = Json::object();
  if (desc.party) params["party"] = *desc.party;
  if (desc.coordinate) params["coordinate"] = *desc.coordinate;
  if (desc.phi) params["phi"] = *desc.phi;
  if (desc.routing) {
    params["alice"] = Json{desc.routing->alice[0], desc.routing->alice[1]};
    params["bob"] = Json{desc.routing->bob[0], desc.routing->bob[1]};
  }
  return Json{{"element", desc.element}, {"params", std::move(params)}};
}

std::vector<ElementDescriptor> pipeline_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a pipeline must be a JSON array of elements");
  }
  std::vector<ElementDescriptor> pipeline;
  pipeline.reserve(j.size());
  for (const Json& entry : j) pipeline.push_back(element_from_json(entry));
  return pipeline;
}

Json pipeline_to_json(const std::vector<ElementDescriptor>& pipeline) {
  Json out = Json::array();
  for (const ElementDescriptor& desc : pipeline) {
    out.push_back(element_to_json(desc));
  }
  return out;
}

ElementDescriptor element_from_json(const Json& j) {
  check_keys(j, {"element", "params"}, "element descriptor");
  if (!j.contains("element")) {
    throw std::invalid_argument("element descriptor needs an element name");
  }
  ElementDescriptor desc;
  desc.element = j.at("element").get<std::string>();
  const Json params = j.value("params", Json::object());
  check_keys(params, {"party", "coordinate", "phi", "alice", "bob"},
             "element params");
  if (params.contains("party")) {
    desc.party = params.at("party").get<std::string>();
  }
  if (params.contains("coordinate")) {
    desc.coordinate = params.at("coordinate").get<std::string>();
  }
  if (params.contains("phi")) desc.phi = params.at("phi").get<double>();
  if (params.contains("alice") || params.contains("bob")) {
    RoutingMap routing;
    if (params.contains("alice")) {
      routing.alice = {params.at("alice").at(0).get<int>(),
                       params.at("alice").at(1).get<int>()};
    }
    if (params.contains("bob")) {
      routing.bob = {params.at("bob").at(0).get<int>(),
                     params.at("bob").at(1).get<int>()};
    }
    desc.routing = routing;
  }
  return desc;
}

}  // namespace hyperepp
