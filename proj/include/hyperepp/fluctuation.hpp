#pragma once
// Time fluctuation of the frequency phase dispersion dphi_f(t).

#include <cstdint>
#include <vector>

#include "hyperepp/errors.hpp"

namespace hyperepp {

// Delta_f(t) = dphi_f(t) - dphi_f(0) over a horizon T. The jitter model is an
// ergodic sweep through [-delta, delta], which has the uniform occupation
// measure the time average needs without Monte Carlo noise.
struct FluctuationSpec {
  enum class Model { kConstant, kUniformJitter, kSinusoid, kUserSeries };

  Model model = Model::kConstant;
  double base = 0.0;     // dphi_f(0), radians
  double horizon = 1.0;  // T, arbitrary time units
  int samples = 100000;  // integration grid resolution

  double delta = 0.0;      // uniform jitter half-width (radians)
  double amplitude = 0.0;  // sinusoid amplitude (radians)
  double period = 1.0;     // sinusoid period (time units)

  // dphi_f(t_i) samples equally spaced on [0, T]; only for kUserSeries.
  std::vector<double> series;

  void validate() const;  // throws std::invalid_argument

  // Delta_f at time t in [0, horizon].
  double delta_at(double t) const;

  // dphi_f(t) = base + Delta_f(t) for the generated models; for a user
  // series the stored samples are authoritative.
  double phase_at(double t) const;
};

}  // namespace hyperepp
