#pragma once
// Conventional recursive entanglement purification comparator: the two-pair
// parity-check scheme on the binary {Phi+, Psi+} mixture, with resource
// accounting against the deterministic protocol.

#include <vector>

#include "hyperepp/errors.hpp"

namespace hyperepp {

struct PurifyRoundResult {
  double fidelity_after = 0.0;
  double success_probability = 0.0;
};

// One recursion round on F|Phi+><Phi+| + (1-F)|Psi+><Psi+| per pair:
//   F'        = F^2 / (F^2 + (1-F)^2)
//   p_success = F^2 + (1-F)^2
// F in {0, 1} is a fixed point, not an error; F outside [0, 1] is rejected.
PurifyRoundResult pan_purify_round(double f);

struct RecursionRound {
  double fidelity_before = 0.0;
  double fidelity_after = 0.0;
  double success_probability = 0.0;
};

struct RecursionTrace {
  std::vector<RecursionRound> rounds;
  double pairs_consumed_expected = 1.0;  // product of 2/p over rounds
  double target_fidelity = 0.0;
  double final_fidelity = 0.0;
  // Deterministic-side summary: one hyperentangled pair, output fidelity one
  // with ideal carriers.
  int deterministic_pairs = 1;
  double deterministic_fidelity = 1.0;
};

// Iterates pan_purify_round until F >= f_target. Expected pairs consumed are
// the product over rounds of 2/p_success. F0 <= 1/2 is non-purifiable;
// f_target <= F0 needs zero rounds and a single pair.
RecursionTrace resource_compare(double f0, double f_target);

}  // namespace hyperepp
