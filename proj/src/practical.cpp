#include "hyperepp/practical.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperepp {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr double kCatalogTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int state_index(int pol_a, int pol_b, int freq_a, int freq_b, int rail_a,
                int rail_b) {
  return BasisLabel{pol_a, pol_b, freq_a, freq_b, rail_a, rail_b}.index();
}

void check_simplex(double a, double b, double c, double d) {
  for (double w : {a, b, c, d}) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be nonnegative");
    }
  }
  if (std::abs(a + b + c + d - 1.0) > kSimplexTol) {
    throw std::invalid_argument("weights must sum to one");
  }
}

}  // namespace

double bitflip_fidelity_formula(double a, double b, double c, double d,
                                double dphi_s) {
  check_simplex(a, b, c, d);
  return 0.5 * (1.0 + (a + c - b - d) * std::cos(dphi_s));
}

double simulated_bitflip_fidelity(const NoiseModel& n) {
  const DensityMatrix noisy = apply_channel(source_state(), n);
  Eigen::Matrix4cd pol = Eigen::Matrix4cd::Zero();
  for (const StepBranch& b : bitflip_step(noisy)) {
    pol += b.probability * partial_trace(b.state, KeepSet{.pol = true});
  }
  return fidelity(Matrix(pol), Vector(bell_vector(BellLabel::kPhiPlus)));
}

DensityMatrix compensate_phase(const DensityMatrix& rho, double phi) {
  return local_phase(rho, Coord::kPolB, -phi);
}

FfResult time_avg_ff(const FluctuationSpec& spec) {
  spec.validate();

  double ff = 1.0;
  if (spec.model != FluctuationSpec::Model::kConstant) {
    const std::size_t n =
        spec.model == FluctuationSpec::Model::kUserSeries
            ? spec.series.size()
            : static_cast<std::size_t>(std::max(spec.samples, 2));
    if (n == 1) {
      ff = 0.5 * (1.0 + std::cos(spec.delta_at(0.0)));
    } else {
      // Trapezoidal average of (1 + cos Delta_f(t))/2 over [0, T].
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = spec.horizon * static_cast<double>(i) /
                         static_cast<double>(n - 1);
        const double f = 0.5 * (1.0 + std::cos(spec.delta_at(t)));
        sum += (i == 0 || i + 1 == n) ? 0.5 * f : f;
      }
      ff = sum / static_cast<double>(n - 1);
    }
  }

  FfResult out;
  out.ff = ff;
  const Eigen::Vector4cd plus = bell_vector(BellLabel::kPhiPlus);
  const Eigen::Vector4cd minus = bell_vector(BellLabel::kPhiMinus);
  out.ensemble_pol =
      ff * plus * plus.adjoint() + (1.0 - ff) * minus * minus.adjoint();
  return out;
}

void FiberGeometry::validate() const {
  for (double l : {l_a1, l_a2, l_b1, l_b2}) {
    if (l < 0.0 || !std::isfinite(l)) {
      throw std::invalid_argument("channel lengths must be nonnegative");
    }
  }
  if (v <= 0.0 || !std::isfinite(v)) {
    throw std::invalid_argument("propagation speed must be positive");
  }
  if (omega1 == omega2 || !std::isfinite(omega1) || !std::isfinite(omega2)) {
    throw std::invalid_argument("the two frequencies must differ");
  }
}

FactorizationResult factorization_overlap(const FiberGeometry& g) {
  g.validate();
  FactorizationResult out;

  // Exact per-term phases exp(i (w_A L_A + w_B L_B)/v), amplitude 1/2 each,
  // ordered [(w1w2,r1), (w2w1,r1), (w1w2,r2), (w2w1,r2)].
  auto term = [&](double wa, double la, double wb, double lb) {
    return std::polar(0.5, (wa * la + wb * lb) / g.v);
  };
  out.exact(0) = term(g.omega1, g.l_a1, g.omega2, g.l_b1);
  out.exact(1) = term(g.omega2, g.l_a1, g.omega1, g.l_b1);
  out.exact(2) = term(g.omega1, g.l_a2, g.omega2, g.l_b2);
  out.exact(3) = term(g.omega2, g.l_a2, g.omega1, g.l_b2);

  // Factorized approximation: one relative phase per degree of freedom.
  const double global = (g.omega1 * g.l_a1 + g.omega2 * g.l_b1) / g.v;
  const double freq_rel =
      ((g.omega2 - g.omega1) * g.l_a1 + (g.omega1 - g.omega2) * g.l_b1) / g.v;
  const double rail_rel =
      (g.omega1 * (g.l_a2 - g.l_a1) + g.omega2 * (g.l_b2 - g.l_b1)) / g.v;
  out.factorized(0) = std::polar(0.5, global);
  out.factorized(1) = std::polar(0.5, global + freq_rel);
  out.factorized(2) = std::polar(0.5, global + rail_rel);
  out.factorized(3) = std::polar(0.5, global + freq_rel + rail_rel);

  out.overlap = std::norm(out.exact.dot(out.factorized));
  out.residual_phase = (g.omega2 - g.omega1) *
                       ((g.l_a2 - g.l_a1) - (g.l_b2 - g.l_b1)) / g.v;
  out.condition_value =
      (2.0 * (g.omega2 * g.l_a2 + g.omega1 * g.l_b2) - g.omega2 * g.l_a1 -
       g.omega1 * g.l_b1 - g.omega1 * (g.l_a2 - g.l_a1) -
       g.omega2 * (g.l_b2 - g.l_b1)) /
      g.v;
  return out;
}

Vector catalog_bitflip_state(PauliClass k, const QndOutcome& outcome,
                             double dphi_s, double dphi_f) {
  const Complex es = std::polar(1.0, dphi_s);
  const Complex ef = std::polar(1.0, dphi_f);

  // Polarization components (pol_A, pol_B, amplitude) per class and branch.
  struct PolComponent {
    int pol_a, pol_b;
    Complex amp;
  };
  std::array<PolComponent, 2> pol{};
  const bool theta_alice = outcome.alice_theta;
  switch (k) {
    case PauliClass::kIdentity:
      if (!outcome.equal()) {
        throw std::invalid_argument("identity class has equal outcomes only");
      }
      pol = {PolComponent{0, 0, theta_alice ? Complex(1) : es},
             PolComponent{1, 1, theta_alice ? es : Complex(1)}};
      break;
    case PauliClass::kZ:
      if (!outcome.equal()) {
        throw std::invalid_argument("Z class has equal outcomes only");
      }
      pol = {PolComponent{0, 0, theta_alice ? Complex(1) : es},
             PolComponent{1, 1, theta_alice ? -es : Complex(-1)}};
      break;
    case PauliClass::kX:
      if (outcome.equal()) {
        throw std::invalid_argument("X class has unequal outcomes only");
      }
      pol = {PolComponent{0, 1, theta_alice ? Complex(1) : es},
             PolComponent{1, 0, theta_alice ? es : Complex(1)}};
      break;
    case PauliClass::kXZ:
      if (outcome.equal()) {
        throw std::invalid_argument("XZ class has unequal outcomes only");
      }
      pol = {PolComponent{0, 1, theta_alice ? Complex(1) : es},
             PolComponent{1, 0, theta_alice ? -es : Complex(-1)}};
      break;
  }

  Vector psi = Vector::Zero(kDim);
  for (const PolComponent& p : pol) {
    // Frequency factor (|w1 w2> + e^{i dphi_f} |w2 w1>)/sqrt2.
    psi(state_index(p.pol_a, p.pol_b, 0, 1, outcome.alice_rail,
                    outcome.bob_rail)) += p.amp * kInvSqrt2 * kInvSqrt2;
    psi(state_index(p.pol_a, p.pol_b, 1, 0, outcome.alice_rail,
                    outcome.bob_rail)) += p.amp * ef * kInvSqrt2 * kInvSqrt2;
  }
  psi.normalize();
  return psi;
}

Vector catalog_phaseflip_state(const QndOutcome& outcome, double dphi_f) {
  const Complex ef = std::polar(1.0, dphi_f);
  const int ra = outcome.alice_rail;
  const int rb = outcome.bob_rail;

  struct Component {
    int pol_a, freq_a, pol_b, freq_b;
    Complex amp;
  };
  std::array<Component, 2> comps{};
  if (outcome.alice_theta && outcome.bob_theta) {
    comps = {Component{0, 0, 0, 1, Complex(1)}, Component{1, 1, 1, 0, ef}};
  } else if (!outcome.alice_theta && !outcome.bob_theta) {
    comps = {Component{0, 1, 0, 0, ef}, Component{1, 0, 1, 1, Complex(1)}};
  } else if (outcome.alice_theta && !outcome.bob_theta) {
    comps = {Component{0, 0, 1, 1, Complex(1)}, Component{1, 1, 0, 0, ef}};
  } else {
    comps = {Component{0, 1, 1, 0, ef}, Component{1, 0, 0, 1, Complex(1)}};
  }

  Vector psi = Vector::Zero(kDim);
  for (const Component& c : comps) {
    psi(state_index(c.pol_a, c.pol_b, c.freq_a, c.freq_b, ra, rb)) +=
        c.amp * kInvSqrt2;
  }
  psi.normalize();
  return psi;
}

PurificationReport dispersive_epp_run(const NoiseModel& n, bool compensation,
                                      const RunOptions& base_opts) {
  n.validate();
  RunOptions opts = base_opts;
  const double known_dphi_f = n.fluctuation ? n.fluctuation->base : n.dphi_f;
  opts.compensation =
      compensation ? std::optional<double>(known_dphi_f) : std::nullopt;

  // With a fixed dispersion every measurement branch must land exactly on the
  // quoted branch catalog; a mismatch means an element model is broken.
  if (!n.fluctuation) {
    opts.on_bitflip_branch = [&n](PauliClass k, const QndOutcome& o,
                                  const DensityMatrix& s) {
      const Vector expected = catalog_bitflip_state(k, o, n.dphi_s, n.dphi_f);
      if (fidelity(s, expected) < 1.0 - kCatalogTol) {
        throw ContractViolationError(
            "bit-flip branch state deviates from the branch catalog");
      }
    };
    opts.on_phaseflip_branch = [&n](PauliClass, const QndOutcome& o,
                                    const DensityMatrix& s) {
      const Vector expected = catalog_phaseflip_state(o, n.dphi_f);
      if (fidelity(s, expected) < 1.0 - kCatalogTol) {
        throw ContractViolationError(
            "phase-flip branch state deviates from the branch catalog");
      }
    };
  }
  return run_epp(n, opts);
}

}  // namespace hyperepp
