#pragma once
// JSON and CSV serialization for states, reports and configuration records.
// JSON key order and floating-point formatting are deterministic so identical
// inputs produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperepp/baseline.hpp"
#include "hyperepp/epp.hpp"
#include "hyperepp/nbsa.hpp"
#include "hyperepp/optics.hpp"
#include "hyperepp/practical.hpp"
#include "hyperepp/state.hpp"

namespace hyperepp {

using Json = nlohmann::json;

// Shortest round-trip decimal representation (locale-free).
std::string format_double(double value);

// State dump: {"basis": "v1", "re": [[...]], "im": [[...]]} in the fixed
// index convention. The loader rejects unknown basis tags and wrong-size
// matrices.
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json outcome_to_json(const QndOutcome& outcome, Stage stage);
Json report_to_json(const PurificationReport& report);
std::string report_to_csv(const PurificationReport& report);

Json truth_table_to_json(const std::vector<TruthTableRow>& table);
std::string truth_table_to_text(const std::vector<TruthTableRow>& table);

Json ff_to_json(const FluctuationSpec& spec, const FfResult& result);
Json factorization_to_json(const FiberGeometry& geometry,
                           const FactorizationResult& result);

Json trace_to_json(const RecursionTrace& trace);
std::string trace_to_csv(const RecursionTrace& trace);

Json noise_to_json(const NoiseModel& noise);
Json fluctuation_to_json(const FluctuationSpec& spec);

// Config records. Every parser rejects unknown keys.
NoiseModel noise_from_json(const Json& j);
FluctuationSpec fluctuation_from_json(const Json& j);
FiberGeometry geometry_from_json(const Json& j);

Json element_to_json(const ElementDescriptor& desc);
ElementDescriptor element_from_json(const Json& j);

// A pipeline is a JSON array of element descriptors.
std::vector<ElementDescriptor> pipeline_from_json(const Json& j);
Json pipeline_to_json(const std::vector<ElementDescriptor>& pipeline);

}  // namespace hyperepp
