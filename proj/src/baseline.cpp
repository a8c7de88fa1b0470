#include "hyperepp/baseline.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperepp {

PurifyRoundResult pan_purify_round(double f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::invalid_argument("fidelity must lie in [0, 1]");
  }
  const double p = f * f + (1.0 - f) * (1.0 - f);
  return PurifyRoundResult{f * f / p, p};
}

RecursionTrace resource_compare(double f0, double f_target) {
  if (!(f0 < 1.0) || !std::isfinite(f0)) {
    throw std::invalid_argument("initial fidelity must be below one");
  }
  if (!(f_target > 0.0 && f_target < 1.0)) {
    throw std::invalid_argument("target fidelity must lie in (0, 1)");
  }
  if (f0 <= 0.5) {
    throw NonPurifiableError(
        "recursive purification cannot improve a fidelity at or below 1/2");
  }

  RecursionTrace trace;
  trace.target_fidelity = f_target;

  double f = f0;
  while (f < f_target) {
    const PurifyRoundResult round = pan_purify_round(f);
    trace.rounds.push_back(
        RecursionRound{f, round.fidelity_after, round.success_probability});
    trace.pairs_consumed_expected *= 2.0 / round.success_probability;
    f = round.fidelity_after;
    if (trace.rounds.size() > 128) {
      throw std::logic_error("purification recursion failed to converge");
    }
  }
  trace.final_fidelity = f;
  return trace;
}

}  // namespace hyperepp
