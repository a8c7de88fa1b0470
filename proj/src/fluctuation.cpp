#include "hyperepp/fluctuation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperepp {

void FluctuationSpec::validate() const {
  if (delta < 0) throw std::invalid_argument("jitter half-width must be >= 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (horizon <= 0) throw std::invalid_argument("horizon must be positive");
  if (model == Model::kSinusoid && period <= 0) {
    throw std::invalid_argument("sinusoid period must be positive");
  }
  if (model == Model::kUserSeries && series.empty()) {
    throw std::invalid_argument("user series must not be empty");
  }
}

namespace {

double interpolate(const std::vector<double>& series, double t,
                   double horizon) {
  if (series.size() == 1) return series.front();
  const double x = std::clamp(t / horizon, 0.0, 1.0) *
                   static_cast<double>(series.size() - 1);
  const auto lo = static_cast<std::size_t>(x);
  if (lo + 1 >= series.size()) return series.back();
  const double frac = x - static_cast<double>(lo);
  return series[lo] * (1.0 - frac) + series[lo + 1] * frac;
}

}  // namespace

double FluctuationSpec::delta_at(double t) const {
  switch (model) {
    case Model::kConstant:
      return 0.0;
    case Model::kUniformJitter:
      // Ergodic sweep through [-delta, delta]: the occupation measure over
      // the horizon is uniform, which is what the time average sees.
      return -delta + 2.0 * delta * (t / horizon);
    case Model::kSinusoid:
      return amplitude * std::sin(2.0 * std::numbers::pi * t / period);
    case Model::kUserSeries:
      // The series holds dphi_f(t) samples; base is the dphi_f(0) anchor.
      return interpolate(series, t, horizon) - base;
  }
  return 0.0;
}

double FluctuationSpec::phase_at(double t) const {
  if (model == Model::kUserSeries) return interpolate(series, t, horizon);
  return base + delta_at(t);
}

}  // namespace hyperepp
