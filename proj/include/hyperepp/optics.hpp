#pragma once
// Optical elements of the purification setup as operators and generalized
// measurements: the PBS-coupled cross-Kerr QND parity check, WDM routing,
// polarization Hadamard (QWP), bit-flip sigma_x, local phase plates and the
// frequency-erasing up-conversion.
//
// The Kerr/PBS geometry is encoded by a single parity rule: the probe beam
// picks up the phase shift theta exactly when the photon's polarization bit
// equals its rail bit, and the photon then exits on rail = outcome bit
// (theta -> rail-2, no shift -> rail-1).

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperepp/state.hpp"

namespace hyperepp {

// One QND round: probe phase outcome per party plus the rails the photons
// emitted from. The emitted rail bit is 1 iff that party's outcome is theta.
struct QndOutcome {
  bool alice_theta = false;
  bool bob_theta = false;
  int alice_rail = 0;
  int bob_rail = 0;

  bool equal() const { return alice_theta == bob_theta; }
  bool operator==(const QndOutcome&) const = default;
};

struct QndBranch {
  QndOutcome outcome;
  double probability = 0.0;
  DensityMatrix state;
};

// Cross-Kerr QND parity check on both parties. Four candidate branches keyed
// by (alice_phase, bob_phase); zero-probability branches are omitted. The
// homodyne readout is ideal: outcomes {0, theta} are perfectly
// distinguishable and no probe amplitude or noise is modeled.
std::vector<QndBranch> qnd_pbs(const DensityMatrix& rho);

// The same measurement as an explicit Kraus set (one partial-permutation
// operator per outcome, ordered as qnd_pbs emits branches). Complete by
// construction; used to cross-check the fast path against measure().
KrausSet qnd_kraus_set();

// Per-party frequency-bit -> rail-bit routing. Each party's map must be a
// bijection on {0,1}.
struct RoutingMap {
  std::array<int, 2> alice{0, 1};  // omega1 -> c1, omega2 -> c2
  std::array<int, 2> bob{1, 0};    // omega1 -> d2, omega2 -> d1
};

inline constexpr RoutingMap kDefaultRouting{};

// Polarization-independent WDM: writes each party's rail bit from its
// frequency bit through the map. Rails are expected in the reset state
// (rail-1); the element is realized as an XOR relabeling so it stays unitary
// on the whole space.
DensityMatrix wdm(const DensityMatrix& rho,
                  const RoutingMap& routing = kDefaultRouting);

enum class Acting { kAlice, kBob, kBoth };

// Quarter-wave-plate Hadamard on the chosen polarization(s):
// H|H> = (|H>+|V>)/sqrt2, H|V> = (|H>-|V>)/sqrt2.
DensityMatrix hadamard_pol(const DensityMatrix& rho, Acting who);

// sigma_x = |H><V| + |V><H| on the chosen party.
DensityMatrix sigma_x(const DensityMatrix& rho, Party party);

// Diagonal phase plate: multiplies amplitudes whose `coordinate` bit is set
// (rail-2 / omega_2 / V) by e^{i phi}.
DensityMatrix local_phase(const DensityMatrix& rho, Coord coordinate,
                          double phi);

// Coherent up-conversion: relabels each party's frequency bit to omega_1
// while preserving superposition phases (not a trace-out). Isometric on every
// state whose per-party frequency is determined by the other coordinates,
// which holds for all pipeline states; the output is renormalized.
DensityMatrix frequency_erase(const DensityMatrix& rho);

// The relabeling operator behind frequency_erase (64x64, 0/1 entries).
Matrix frequency_erase_kraus();

// Photons re-enter a single fiber per party between the two purification
// steps: relabels the (deterministic) rails back to rail-1. Throws
// InvalidStateError when the rail marginal is not concentrated on one basis
// rail pair.
DensityMatrix reset_rails(const DensityMatrix& rho);

// Dense matrices of the deterministic elements, for contract checks and for
// callers that want to compose them through apply_unitary.
Matrix hadamard_pol_matrix(Acting who);
Matrix sigma_x_matrix(Party party);
Matrix local_phase_matrix(Coord coordinate, double phi);
Matrix wdm_matrix(const RoutingMap& routing = kDefaultRouting);
Matrix reset_rails_matrix(int rail_a, int rail_b);

// --------------------------------------------------------------------------
// Declarative element descriptors: {"element": name, "params": {...}} so
// protocol pipelines can be declared in config files. Serialization lives in
// report_io.hpp.

struct ElementDescriptor {
  std::string element;
  // Parameter fields; which ones are meaningful depends on the element.
  std::optional<std::string> party;       // "alice" | "bob" | "both"
  std::optional<std::string> coordinate;  // "pol_a", ..., "rail_b"
  std::optional<double> phi;
  std::optional<RoutingMap> routing;
};

// Applies a deterministic element. "qnd_pbs" is a measurement and is rejected
// here; use apply_measurement_element.
DensityMatrix apply_element(const DensityMatrix& rho,
                            const ElementDescriptor& desc);
std::vector<QndBranch> apply_measurement_element(const DensityMatrix& rho,
                                                 const ElementDescriptor& desc);

// Applies a declared pipeline of deterministic elements in order.
DensityMatrix apply_pipeline(const DensityMatrix& rho,
                             const std::vector<ElementDescriptor>& pipeline);

}  // namespace hyperepp
