#pragma once
// End-to-end deterministic purification pipeline: hyperentangled source,
// noise channel, bit-flip correction step, phase-flip correction step,
// classical feed-forward and branch accounting.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperepp/fluctuation.hpp"
#include "hyperepp/optics.hpp"
#include "hyperepp/state.hpp"

namespace hyperepp {

// Per-round measurement outcome record (probe phases plus emitted rails).
using MeasurementRecord = QndOutcome;

// Bell-diagonal polarization weights plus the phase dispersions picked up in
// the spatial and frequency degrees of freedom, and an optional time
// fluctuation of dphi_f.
struct NoiseModel {
  double a = 1.0;  // Phi+
  double b = 0.0;  // Phi-
  double c = 0.0;  // Psi+
  double d = 0.0;  // Psi-
  double dphi_s = 0.0;
  double dphi_f = 0.0;
  std::optional<FluctuationSpec> fluctuation;

  void validate() const;  // throws std::invalid_argument
};

// The four Pauli error classes of the channel, in weight order (a, b, c, d).
enum class PauliClass : int { kIdentity = 0, kZ = 1, kX = 2, kXZ = 3 };
std::string pauli_class_name(PauliClass k);

// One branch of a purification step: the measurement record, conditional
// corrections applied after the classical comparison, branch probability and
// the corrected post-state.
struct StepBranch {
  MeasurementRecord record;
  std::vector<std::string> corrections;
  double probability = 0.0;
  DensityMatrix state;
};

// Observer invoked with every measurement branch before feed-forward
// corrections; used by the practical module to check branch states against
// the dispersive branch catalog.
using BranchObserver =
    std::function<void(const QndOutcome&, const DensityMatrix&)>;

// The hyperentangled source
// (|HH>+|VV>)(|w1 w2>+|w2 w1>)(|r1 r1>+|r2 r2>)/(2 sqrt2).
DensityMatrix source_state();

// Polarization Pauli channel on Bob's photon with weights {a: I, b: Z, c: X,
// d: XZ}, followed by the dispersion phases on rail_B and freq_A.
DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseModel& n);

// Pure Pauli-class component of the channel (the weighted-tree expansion).
DensityMatrix apply_channel_class(const DensityMatrix& rho, PauliClass k,
                                  double dphi_s, double dphi_f);

// Step one: QND parity check; on unequal phase outcomes the correction party
// applies sigma_x. Output branches carry deterministic rails.
std::vector<StepBranch> bitflip_step(const DensityMatrix& rho,
                                     Party correction_party = Party::kBob,
                                     const BranchObserver* observer = nullptr);

// Step two: Hadamard on both polarizations, WDM routing, QND parity check,
// conditional sigma_x, then frequency erasure. Requires rails reset to
// rail-1 (InvalidStateError otherwise).
std::vector<StepBranch> phaseflip_step(
    const DensityMatrix& rho, Party correction_party = Party::kBob,
    const RoutingMap& routing = kDefaultRouting,
    const BranchObserver* observer = nullptr);

enum class RunMode { kExhaustive, kSampled };

struct RunOptions {
  RunMode mode = RunMode::kExhaustive;
  std::uint64_t seed = 0;
  std::int64_t trials = 10000;  // sampled mode only; must be positive there
  Party correction_party = Party::kBob;

  // Applied after the final branch-normalization rotations: the standard
  // compensation local_phase(pol_B, -phi) on every leaf.
  std::optional<double> compensation;

  // The frequency phase the classical feed-forward believes in. Defaults to
  // the channel's dphi_f; under a fluctuating channel it is forced to the
  // nominal dphi_f(0) because the parties cannot track the instantaneous
  // value.
  std::optional<double> known_dphi_f;

  // Branch observers for the two steps (states pre-correction).
  std::function<void(PauliClass, const QndOutcome&, const DensityMatrix&)>
      on_bitflip_branch;
  std::function<void(PauliClass, const QndOutcome&, const DensityMatrix&)>
      on_phaseflip_branch;
};

// One leaf of the purification tree, attributable to an error class.
struct EppBranch {
  PauliClass pauli_class = PauliClass::kIdentity;
  MeasurementRecord step1;
  MeasurementRecord step2;
  std::vector<std::string> corrections;
  double probability = 0.0;
  std::int64_t count = 0;  // sampled mode: trajectories that hit this leaf
  DensityMatrix final_state;
  double fidelity = 0.0;  // polarization fidelity to the target Bell state
};

struct PurificationReport {
  BellLabel target = BellLabel::kPhiPlus;
  RunMode mode = RunMode::kExhaustive;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::vector<EppBranch> branches;
  double total_probability = 0.0;
  double min_final_fidelity = 0.0;
  double max_final_fidelity = 0.0;
  // Polarization fidelity to Phi+ of the branch-mixed state after step one.
  double post_bitflip_fidelity = 0.0;
};

// Runs the full pipeline. Exhaustive mode enumerates the weighted branch tree
// (channel mixture x measurement outcomes) and requires a fixed dispersion
// (no fluctuation). Sampled mode draws trajectories with a counter-split
// seeded generator, so results are identical for identical seeds regardless
// of evaluation order; trials must be positive.
PurificationReport run_epp(const NoiseModel& n, const RunOptions& opts = {});

// Single-pass evolution of a mixed post-channel state through both steps,
// mixing measurement branches back together. Linear in the input; used to
// check that the weighted tree and the mixed-state representation agree and
// that protocol and ensemble averaging interchange.
DensityMatrix pipeline_mixed_final_state(
    const DensityMatrix& noisy_input, double known_dphi_f,
    Party correction_party = Party::kBob,
    std::optional<double> compensation = std::nullopt);
DensityMatrix pipeline_mixed_final_state(const NoiseModel& n,
                                         Party correction_party = Party::kBob);

// Mode labels for reports: step one rails are a/b, step two rails are c/d.
enum class Stage { kBitflip, kPhaseflip };
std::string mode_name(const QndOutcome& outcome, Stage stage);

}  // namespace hyperepp
