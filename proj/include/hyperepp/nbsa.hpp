#pragma once
// Complete nonlocal Bell-state analysis: classify which polarization Bell
// state a hyperentangled pair carries using two QND parity rounds and LOCC
// only. Round one is the bit-flip-style check; round two is the
// frequency-routed check after Hadamards (plus sigma_x on Bob when round one
// came out unequal). The decision table is
//   (equal,   equal)   -> Phi+      (equal,   unequal) -> Phi-
//   (unequal, equal)   -> Psi+      (unequal, unequal) -> Psi-

#include <optional>
#include <string>
#include <vector>

#include "hyperepp/epp.hpp"
#include "hyperepp/optics.hpp"
#include "hyperepp/state.hpp"

namespace hyperepp {

struct NbsaRecord {
  bool round1_equal = false;
  bool round2_equal = false;
  std::vector<std::string> operations;  // LOCC operations applied, in order
};

// Ideal carrier states the analysis consumes: frequency Psi_f and spatial
// Phi_s, both maximally entangled.
struct CarrierStates {
  Eigen::Vector4cd freq;  // over (freq_A, freq_B): default (|w1w2>+|w2w1>)/sqrt2
  Eigen::Vector4cd rail;  // over (rail_A, rail_B): default (|r1r1>+|r2r2>)/sqrt2
};
CarrierStates ideal_carriers();

struct NbsaResult {
  BellLabel classified = BellLabel::kPhiPlus;
  NbsaRecord record;
  // Polarization state left after the protocol (mixing round-two branches).
  Eigen::Matrix4cd post_pol_state;
};

// Classifies a Bell input. Every measurement branch is enumerated and must
// agree on the (round1_equal, round2_equal) pair; a non-Bell polarization
// input is rejected with ClassificationUndefinedError.
NbsaResult nbsa_classify(BellLabel input,
                         const CarrierStates& carriers = ideal_carriers());
NbsaResult nbsa_classify(const Eigen::Vector4cd& pol_state,
                         const CarrierStates& carriers = ideal_carriers());

struct TruthTableBranch {
  QndOutcome round1;
  QndOutcome round2;
  double probability = 0.0;
  double post_pol_fidelity_phi_plus = 0.0;
};

struct TruthTableRow {
  BellLabel input = BellLabel::kPhiPlus;
  bool round1_equal = false;
  bool round2_equal = false;
  BellLabel classified = BellLabel::kPhiPlus;
  std::vector<TruthTableBranch> branches;  // probabilities sum to one
};

// Enumerates all QND branch outcomes per Bell input; every branch of a given
// input maps to the same classification.
std::vector<TruthTableRow> nbsa_truth_table();

}  // namespace hyperepp
