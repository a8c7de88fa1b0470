#include "hyperepp/epp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace hyperepp {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr double kSqrt8 = 2.8284271247461903;  // 2*sqrt(2)

// Exact Pauli applications on Bob's polarization bit, used to expand the
// channel without introducing rounding from e^{i pi}.
Matrix pauli_x_bob(const Matrix& m) {
  const int step = 1 << static_cast<int>(Coord::kPolB);
  Matrix out(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) out(i ^ step, j ^ step) = m(i, j);
  }
  return out;
}

Matrix pauli_z_bob(const Matrix& m) {
  Matrix out = m;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if (coord_bit(i, Coord::kPolB) != coord_bit(j, Coord::kPolB)) {
        out(i, j) = -out(i, j);
      }
    }
  }
  return out;
}

Matrix pauli_class_on_bob(const Matrix& m, PauliClass k) {
  switch (k) {
    case PauliClass::kIdentity:
      return m;
    case PauliClass::kZ:
      return pauli_z_bob(m);
    case PauliClass::kX:
      return pauli_x_bob(m);
    case PauliClass::kXZ:
      return pauli_x_bob(pauli_z_bob(m));
  }
  return m;
}

// Position of an outcome in the canonical enumeration order of qnd_pbs.
int outcome_order(const QndOutcome& o) {
  return (o.alice_theta ? 0 : 2) + (o.bob_theta ? 0 : 1);
}

Eigen::Matrix4cd pol_marginal(const DensityMatrix& rho) {
  return partial_trace(rho, KeepSet{.pol = true});
}

// --------------------------------------------------------------------------
// Pure-state trajectory lane for sampled mode. Every Monte Carlo trajectory
// stays pure (the channel class is drawn, measurements collapse), so the
// evolution runs on 64-component vectors; equivalence with the density-matrix
// lane is pinned by the chi-square and leaf-state tests.

Vector source_vector() {
  Vector psi = Vector::Zero(kDim);
  for (int pol : {0, 1}) {
    for (int freq_a : {0, 1}) {
      for (int rail : {0, 1}) {
        psi(BasisLabel{pol, pol, freq_a, 1 - freq_a, rail, rail}.index()) =
            1.0 / kSqrt8;
      }
    }
  }
  return psi;
}

void vec_pauli_on_bob(Vector& psi, PauliClass k) {
  const int step = 1 << static_cast<int>(Coord::kPolB);
  if (k == PauliClass::kZ || k == PauliClass::kXZ) {
    for (int i = 0; i < kDim; ++i) {
      if (i & step) psi(i) = -psi(i);
    }
  }
  if (k == PauliClass::kX || k == PauliClass::kXZ) {
    for (int i = 0; i < kDim; ++i) {
      if (i & step) std::swap(psi(i), psi(i ^ step));
    }
  }
}

void vec_phase(Vector& psi, Coord c, double phi) {
  const Complex phase = std::polar(1.0, phi);
  for (int i = 0; i < kDim; ++i) {
    if (coord_bit(i, c)) psi(i) *= phase;
  }
}

void vec_one_coord(Vector& psi, Coord c, const Eigen::Matrix2cd& u) {
  const int step = 1 << static_cast<int>(c);
  for (int i = 0; i < kDim; ++i) {
    if (i & step) continue;
    const Complex a = psi(i);
    const Complex b = psi(i | step);
    psi(i) = u(0, 0) * a + u(0, 1) * b;
    psi(i | step) = u(1, 0) * a + u(1, 1) * b;
  }
}

void vec_sigma_x(Vector& psi, Party party) {
  const int step = 1 << static_cast<int>(pol_coord(party));
  for (int i = 0; i < kDim; ++i) {
    if (i & step) std::swap(psi(i), psi(i ^ step));
  }
}

template <typename PermFn>
void vec_permute(Vector& psi, PermFn perm) {
  Vector out = Vector::Zero(kDim);
  for (int i = 0; i < kDim; ++i) out(perm(i)) = psi(i);
  psi = std::move(out);
}

bool vec_party_theta(int index, Party p) {
  return coord_bit(index, pol_coord(p)) == coord_bit(index, rail_coord(p));
}

std::array<double, 4> vec_qnd_probabilities(const Vector& psi) {
  // Canonical outcome order (theta,theta), (theta,0), (0,theta), (0,0).
  std::array<double, 4> probs{0, 0, 0, 0};
  for (int i = 0; i < kDim; ++i) {
    const int slot = (vec_party_theta(i, Party::kAlice) ? 0 : 2) +
                     (vec_party_theta(i, Party::kBob) ? 0 : 1);
    probs[slot] += std::norm(psi(i));
  }
  return probs;
}

QndOutcome vec_outcome_from_slot(int slot) {
  const bool at = slot < 2;
  const bool bt = (slot % 2) == 0;
  return QndOutcome{at, bt, at ? 1 : 0, bt ? 1 : 0};
}

void vec_qnd_collapse(Vector& psi, int slot, double probability) {
  const QndOutcome o = vec_outcome_from_slot(slot);
  Vector out = Vector::Zero(kDim);
  const double scale = 1.0 / std::sqrt(probability);
  for (int i = 0; i < kDim; ++i) {
    if (vec_party_theta(i, Party::kAlice) == o.alice_theta &&
        vec_party_theta(i, Party::kBob) == o.bob_theta) {
      int j = with_coord(i, Coord::kRailA, o.alice_rail);
      j = with_coord(j, Coord::kRailB, o.bob_rail);
      out(j) = psi(i) * scale;
    }
  }
  psi = std::move(out);
}

void vec_erase_frequency(Vector& psi) {
  Vector out = Vector::Zero(kDim);
  for (int i = 0; i < kDim; ++i) {
    int j = with_coord(i, Coord::kFreqA, 0);
    j = with_coord(j, Coord::kFreqB, 0);
    out(j) += psi(i);
  }
  const double norm = out.norm();
  if (norm < 1e-7) {
    throw InvalidStateError(
        "state has no overlap with the up-conversion acceptance mode");
  }
  psi = out / norm;
}

Eigen::Matrix4cd vec_pol_marginal(const Vector& psi) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  const int pol_mask = (1 << static_cast<int>(Coord::kPolA)) |
                       (1 << static_cast<int>(Coord::kPolB));
  for (int i = 0; i < kDim; ++i) {
    if (psi(i) == Complex(0.0, 0.0)) continue;
    for (int j = 0; j < kDim; ++j) {
      if ((i & ~pol_mask) != (j & ~pol_mask)) continue;
      out(2 * coord_bit(i, Coord::kPolA) + coord_bit(i, Coord::kPolB),
          2 * coord_bit(j, Coord::kPolA) + coord_bit(j, Coord::kPolB)) +=
          psi(i) * std::conj(psi(j));
    }
  }
  return out;
}

// Deterministic counter-split generator: each trial owns an independent
// stream derived from (seed, trial), so sampling order or parallel
// evaluation cannot change the results.
struct SplitMix64 {
  std::uint64_t state;

  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 g{seed ^ (0x9E3779B97F4A7C15ull * (trial + 1))};
    g.next();
    g.next();
    return g;
  }

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() {  // in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace

void NoiseModel::validate() const {
  for (double w : {a, b, c, d}) {
    if (w < 0.0 || !std::isfinite(w)) {
      throw std::invalid_argument("Bell-diagonal weights must be nonnegative");
    }
  }
  if (std::abs(a + b + c + d - 1.0) > kSimplexTol) {
    throw std::invalid_argument("Bell-diagonal weights must sum to one");
  }
  if (!std::isfinite(dphi_s) || !std::isfinite(dphi_f)) {
    throw std::invalid_argument("phase dispersions must be finite");
  }
  if (fluctuation) fluctuation->validate();
}

std::string pauli_class_name(PauliClass k) {
  switch (k) {
    case PauliClass::kIdentity:
      return "a";
    case PauliClass::kZ:
      return "b";
    case PauliClass::kX:
      return "c";
    case PauliClass::kXZ:
      return "d";
  }
  return "?";
}

DensityMatrix source_state() {
  Vector psi = Vector::Zero(kDim);
  for (int pol : {0, 1}) {
    for (int freq_a : {0, 1}) {
      for (int rail : {0, 1}) {
        const BasisLabel label{pol, pol, freq_a, 1 - freq_a, rail, rail};
        psi(label.index()) = 1.0 / kSqrt8;
      }
    }
  }
  return make_pure(psi);
}

DensityMatrix apply_channel_class(const DensityMatrix& rho, PauliClass k,
                                  double dphi_s, double dphi_f) {
  DensityMatrix out(pauli_class_on_bob(rho.matrix(), k));
  if (dphi_s != 0.0) out = local_phase(out, Coord::kRailB, dphi_s);
  if (dphi_f != 0.0) out = local_phase(out, Coord::kFreqA, dphi_f);
  return out;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseModel& n) {
  n.validate();
  const Matrix& m = rho.matrix();
  Matrix mixed = n.a * m + n.b * pauli_z_bob(m) + n.c * pauli_x_bob(m) +
                 n.d * pauli_x_bob(pauli_z_bob(m));
  DensityMatrix out{std::move(mixed)};
  if (n.dphi_s != 0.0) out = local_phase(out, Coord::kRailB, n.dphi_s);
  if (n.dphi_f != 0.0) out = local_phase(out, Coord::kFreqA, n.dphi_f);
  return out;
}

std::vector<StepBranch> bitflip_step(const DensityMatrix& rho,
                                     Party correction_party,
                                     const BranchObserver* observer) {
  std::vector<StepBranch> out;
  for (const QndBranch& branch : qnd_pbs(rho)) {
    if (observer && *observer) (*observer)(branch.outcome, branch.state);
    StepBranch step{branch.outcome, {}, branch.probability, branch.state};
    if (!branch.outcome.equal()) {
      step.state = sigma_x(step.state, correction_party);
      step.corrections.push_back("sigma_x(" + party_name(correction_party) +
                                 ")");
    }
    out.push_back(std::move(step));
  }
  return out;
}

std::vector<StepBranch> phaseflip_step(const DensityMatrix& rho,
                                       Party correction_party,
                                       const RoutingMap& routing,
                                       const BranchObserver* observer) {
  // The photons arrive on a single fiber per party: rails must be reset.
  std::array<double, 4> rail_weight{0, 0, 0, 0};
  for (int i = 0; i < kDim; ++i) {
    rail_weight[2 * coord_bit(i, Coord::kRailA) +
                coord_bit(i, Coord::kRailB)] += rho.matrix()(i, i).real();
  }
  if (rail_weight[0] < 1.0 - 1e-10) {
    throw InvalidStateError("phaseflip_step requires rails reset to rail-1");
  }

  DensityMatrix prepared = wdm(hadamard_pol(rho, Acting::kBoth), routing);
  std::vector<StepBranch> out;
  for (const QndBranch& branch : qnd_pbs(prepared)) {
    if (observer && *observer) (*observer)(branch.outcome, branch.state);
    StepBranch step{branch.outcome, {}, branch.probability, branch.state};
    if (!branch.outcome.equal()) {
      step.state = sigma_x(step.state, correction_party);
      step.corrections.push_back("sigma_x(" + party_name(correction_party) +
                                 ")");
    }
    step.state = frequency_erase(step.state);
    out.push_back(std::move(step));
  }
  return out;
}

namespace {

struct LeafKey {
  int pauli_class;
  int step1_order;
  int step2_order;

  auto operator<=>(const LeafKey&) const = default;
};

// Shared leaf post-processing: the branch-known normalization rotation that
// brings every leaf to the common form (|HH> + e^{i dphi_f}|VV>)/sqrt2, then
// the optional standard compensation.
DensityMatrix finish_leaf(DensityMatrix state, const QndOutcome& step2,
                          double dphi_f, std::optional<double> compensation,
                          std::vector<std::string>* corrections) {
  if (!step2.alice_theta && dphi_f != 0.0) {
    state = local_phase(state, Coord::kPolB, 2.0 * dphi_f);
    if (corrections) {
      corrections->push_back("local_phase(pol_b, 2*dphi_f)");
    }
  }
  if (compensation && *compensation != 0.0) {
    state = local_phase(state, Coord::kPolB, -*compensation);
    if (corrections) corrections->push_back("compensate(dphi_f)");
  }
  return state;
}

void finalize_report(PurificationReport& report) {
  double total = 0.0;
  double min_f = 1.0;
  double max_f = 0.0;
  for (const EppBranch& leaf : report.branches) {
    if (leaf.probability < 0.0 || leaf.probability > 1.0) {
      throw ContractViolationError("branch probability outside [0, 1]");
    }
    total += leaf.probability;
    min_f = std::min(min_f, leaf.fidelity);
    max_f = std::max(max_f, leaf.fidelity);
  }
  // No branch is ever discarded: the tree must account for everything.
  if (std::abs(total - 1.0) > 1e-10) {
    throw ContractViolationError("purification branches do not sum to one");
  }
  report.total_probability = total;
  report.min_final_fidelity = report.branches.empty() ? 0.0 : min_f;
  report.max_final_fidelity = report.branches.empty() ? 0.0 : max_f;
}

PurificationReport run_exhaustive(const NoiseModel& n, const RunOptions& opts) {
  if (n.fluctuation) {
    throw std::invalid_argument(
        "exhaustive mode requires a fixed dispersion (no fluctuation)");
  }
  PurificationReport report;
  report.mode = RunMode::kExhaustive;

  const DensityMatrix src = source_state();
  const std::array<double, 4> weights{n.a, n.b, n.c, n.d};
  const Eigen::Vector4cd target = bell_vector(BellLabel::kPhiPlus);
  Eigen::Matrix4cd post_step1 = Eigen::Matrix4cd::Zero();

  for (int ki = 0; ki < 4; ++ki) {
    const double w = weights[ki];
    if (w == 0.0) continue;
    const auto k = static_cast<PauliClass>(ki);
    const DensityMatrix rho_k =
        apply_channel_class(src, k, n.dphi_s, n.dphi_f);

    BranchObserver observe1;
    if (opts.on_bitflip_branch) {
      observe1 = [&](const QndOutcome& o, const DensityMatrix& s) {
        opts.on_bitflip_branch(k, o, s);
      };
    }
    BranchObserver observe2;
    if (opts.on_phaseflip_branch) {
      observe2 = [&](const QndOutcome& o, const DensityMatrix& s) {
        opts.on_phaseflip_branch(k, o, s);
      };
    }

    for (const StepBranch& b1 :
         bitflip_step(rho_k, opts.correction_party,
                      opts.on_bitflip_branch ? &observe1 : nullptr)) {
      post_step1 += w * b1.probability * pol_marginal(b1.state);
      const DensityMatrix rails_fresh = reset_rails(b1.state);
      for (const StepBranch& b2 : phaseflip_step(
               rails_fresh, opts.correction_party, kDefaultRouting,
               opts.on_phaseflip_branch ? &observe2 : nullptr)) {
        EppBranch leaf;
        leaf.pauli_class = k;
        leaf.step1 = b1.record;
        leaf.step2 = b2.record;
        leaf.corrections = b1.corrections;
        leaf.corrections.insert(leaf.corrections.end(),
                                b2.corrections.begin(), b2.corrections.end());
        leaf.probability = w * b1.probability * b2.probability;
        leaf.final_state =
            finish_leaf(b2.state, b2.record,
                        opts.known_dphi_f.value_or(n.dphi_f),
                        opts.compensation, &leaf.corrections);
        leaf.fidelity = fidelity(pol_marginal(leaf.final_state), target);
        report.branches.push_back(std::move(leaf));
      }
    }
  }

  report.post_bitflip_fidelity =
      (target.adjoint() * post_step1 * target)(0, 0).real();
  finalize_report(report);
  return report;
}

PurificationReport run_sampled(const NoiseModel& n, const RunOptions& opts) {
  if (opts.trials <= 0) {
    throw std::invalid_argument("sampled mode requires a positive trial count");
  }
  PurificationReport report;
  report.mode = RunMode::kSampled;
  report.seed = opts.seed;
  report.trials = opts.trials;

  const Vector src = source_vector();
  const std::array<double, 4> weights{n.a, n.b, n.c, n.d};
  const Eigen::Vector4cd target = bell_vector(BellLabel::kPhiPlus);

  struct LeafAccum {
    EppBranch leaf;
    Matrix state_sum = Matrix::Zero(kDim, kDim);
  };
  std::map<LeafKey, LeafAccum> accum;
  Eigen::Matrix4cd post_step1 = Eigen::Matrix4cd::Zero();

  const auto draw_slot = [](const std::array<double, 4>& probs, double u) {
    double acc = 0.0;
    int last_live = 3;
    for (int slot = 3; slot >= 0; --slot) {
      if (probs[slot] >= kZeroBranchTol) {
        last_live = slot;
        break;
      }
    }
    for (int slot = 0; slot < 4; ++slot) {
      if (probs[slot] < kZeroBranchTol) continue;
      acc += probs[slot];
      if (u < acc) return slot;
    }
    return last_live;
  };

  int last_positive_class = 0;
  for (int w = 3; w >= 0; --w) {
    if (weights[w] > 0.0) {
      last_positive_class = w;
      break;
    }
  }

  for (std::int64_t trial = 0; trial < opts.trials; ++trial) {
    SplitMix64 rng = SplitMix64::for_trial(opts.seed, trial);
    double acc = 0.0;
    int ki = last_positive_class;
    const double u_class = rng.uniform();
    for (int w = 0; w < 4; ++w) {
      if (weights[w] <= 0.0) continue;
      acc += weights[w];
      if (u_class < acc) {
        ki = w;
        break;
      }
    }
    const auto k = static_cast<PauliClass>(ki);

    double dphi_f = n.dphi_f;
    if (n.fluctuation) {
      dphi_f = n.fluctuation->phase_at(rng.uniform() * n.fluctuation->horizon);
    }

    // Channel class and dispersion phases on the pure source.
    Vector psi = src;
    vec_pauli_on_bob(psi, k);
    if (n.dphi_s != 0.0) vec_phase(psi, Coord::kRailB, n.dphi_s);
    if (dphi_f != 0.0) vec_phase(psi, Coord::kFreqA, dphi_f);

    // Step one: QND parity check, conditional sigma_x.
    std::vector<std::string> corrections;
    const auto probs1 = vec_qnd_probabilities(psi);
    const int slot1 = draw_slot(probs1, rng.uniform());
    vec_qnd_collapse(psi, slot1, probs1[slot1]);
    const QndOutcome o1 = vec_outcome_from_slot(slot1);
    if (opts.on_bitflip_branch) {
      opts.on_bitflip_branch(k, o1, make_pure(psi));
    }
    if (!o1.equal()) {
      vec_sigma_x(psi, opts.correction_party);
      corrections.push_back("sigma_x(" + party_name(opts.correction_party) +
                            ")");
    }
    post_step1 += vec_pol_marginal(psi);

    // Fresh fibers into step two, Hadamards, WDM.
    vec_permute(psi, [&](int i) {
      i = with_coord(i, Coord::kRailA,
                     coord_bit(i, Coord::kRailA) ^ o1.alice_rail);
      return with_coord(i, Coord::kRailB,
                        coord_bit(i, Coord::kRailB) ^ o1.bob_rail);
    });
    vec_one_coord(psi, Coord::kPolA, hadamard2());
    vec_one_coord(psi, Coord::kPolB, hadamard2());
    vec_permute(psi, [](int i) {
      const int ra = coord_bit(i, Coord::kRailA) ^
                     kDefaultRouting.alice[coord_bit(i, Coord::kFreqA)];
      const int rb = coord_bit(i, Coord::kRailB) ^
                     kDefaultRouting.bob[coord_bit(i, Coord::kFreqB)];
      i = with_coord(i, Coord::kRailA, ra);
      return with_coord(i, Coord::kRailB, rb);
    });

    // Step two: QND parity check, conditional sigma_x, frequency erasure.
    const auto probs2 = vec_qnd_probabilities(psi);
    const int slot2 = draw_slot(probs2, rng.uniform());
    vec_qnd_collapse(psi, slot2, probs2[slot2]);
    const QndOutcome o2 = vec_outcome_from_slot(slot2);
    if (opts.on_phaseflip_branch) {
      opts.on_phaseflip_branch(k, o2, make_pure(psi));
    }
    if (!o2.equal()) {
      vec_sigma_x(psi, opts.correction_party);
      corrections.push_back("sigma_x(" + party_name(opts.correction_party) +
                            ")");
    }
    vec_erase_frequency(psi);

    // Feed-forward can only use what the parties know: the nominal phase
    // dphi_f(0), not the instantaneous fluctuating value.
    const double known_dphi_f = opts.known_dphi_f.value_or(
        n.fluctuation ? n.fluctuation->base : n.dphi_f);
    if (!o2.alice_theta && known_dphi_f != 0.0) {
      vec_phase(psi, Coord::kPolB, 2.0 * known_dphi_f);
      corrections.push_back("local_phase(pol_b, 2*dphi_f)");
    }
    if (opts.compensation && *opts.compensation != 0.0) {
      vec_phase(psi, Coord::kPolB, -*opts.compensation);
      corrections.push_back("compensate(dphi_f)");
    }

    const LeafKey key{ki, outcome_order(o1), outcome_order(o2)};
    auto it = accum.find(key);
    if (it == accum.end()) {
      LeafAccum entry;
      entry.leaf.pauli_class = k;
      entry.leaf.step1 = o1;
      entry.leaf.step2 = o2;
      entry.leaf.corrections = std::move(corrections);
      it = accum.emplace(key, std::move(entry)).first;
    }
    it->second.leaf.count += 1;
    it->second.state_sum += psi * psi.adjoint();
  }

  for (auto& [key, entry] : accum) {
    entry.leaf.probability = static_cast<double>(entry.leaf.count) /
                             static_cast<double>(opts.trials);
    entry.leaf.final_state = DensityMatrix(
        entry.state_sum / static_cast<double>(entry.leaf.count));
    entry.leaf.fidelity = fidelity(pol_marginal(entry.leaf.final_state), target);
    report.branches.push_back(std::move(entry.leaf));
  }

  post_step1 /= static_cast<double>(opts.trials);
  report.post_bitflip_fidelity =
      (target.adjoint() * post_step1 * target)(0, 0).real();
  finalize_report(report);
  return report;
}

}  // namespace

PurificationReport run_epp(const NoiseModel& n, const RunOptions& opts) {
  n.validate();
  return opts.mode == RunMode::kExhaustive ? run_exhaustive(n, opts)
                                           : run_sampled(n, opts);
}

DensityMatrix pipeline_mixed_final_state(const DensityMatrix& noisy_input,
                                         double known_dphi_f,
                                         Party correction_party,
                                         std::optional<double> compensation) {
  Matrix after_step1 = Matrix::Zero(kDim, kDim);
  for (const StepBranch& b1 : bitflip_step(noisy_input, correction_party)) {
    after_step1 += b1.probability * reset_rails(b1.state).matrix();
  }

  Matrix final_mix = Matrix::Zero(kDim, kDim);
  for (const StepBranch& b2 :
       phaseflip_step(DensityMatrix(after_step1), correction_party)) {
    const DensityMatrix done =
        finish_leaf(b2.state, b2.record, known_dphi_f, compensation, nullptr);
    final_mix += b2.probability * done.matrix();
  }
  return DensityMatrix(std::move(final_mix));
}

DensityMatrix pipeline_mixed_final_state(const NoiseModel& n,
                                         Party correction_party) {
  n.validate();
  return pipeline_mixed_final_state(apply_channel(source_state(), n),
                                    n.dphi_f, correction_party);
}

std::string mode_name(const QndOutcome& outcome, Stage stage) {
  const char alice = stage == Stage::kBitflip ? 'a' : 'c';
  const char bob = stage == Stage::kBitflip ? 'b' : 'd';
  std::string s;
  s += alice;
  s += static_cast<char>('1' + outcome.alice_rail);
  s += bob;
  s += static_cast<char>('1' + outcome.bob_rail);
  return s;
}

}  // namespace hyperepp
