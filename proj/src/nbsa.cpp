#include "hyperepp/nbsa.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperepp {

namespace {

constexpr double kBellMatchTol = 1e-12;

Eigen::Matrix4cd pol_marginal(const DensityMatrix& rho) {
  return partial_trace(rho, KeepSet{.pol = true});
}

Vector product_state(const Eigen::Vector4cd& pol, const CarrierStates& c) {
  Vector psi = Vector::Zero(kDim);
  for (int i = 0; i < kDim; ++i) {
    const BasisLabel l = BasisLabel::from_index(i);
    psi(i) = pol(2 * l.pol_a + l.pol_b) * c.freq(2 * l.freq_a + l.freq_b) *
             c.rail(2 * l.rail_a + l.rail_b);
  }
  return psi;
}

BellLabel classify_from_rounds(bool round1_equal, bool round2_equal) {
  if (round1_equal) {
    return round2_equal ? BellLabel::kPhiPlus : BellLabel::kPhiMinus;
  }
  return round2_equal ? BellLabel::kPsiPlus : BellLabel::kPsiMinus;
}

struct Analysis {
  bool round1_equal = false;
  bool round2_equal = false;
  std::vector<TruthTableBranch> branches;
  Eigen::Matrix4cd post_pol = Eigen::Matrix4cd::Zero();
  std::vector<std::string> operations;
};

Analysis analyze(const Eigen::Vector4cd& pol, const CarrierStates& carriers) {
  if (std::abs(pol.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("polarization state must be normalized");
  }
  if (std::abs(carriers.freq.norm() - 1.0) > 1e-12 ||
      std::abs(carriers.rail.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("carrier states must be normalized");
  }
  bool is_bell = false;
  for (BellLabel label : kAllBellLabels) {
    const Complex overlap = bell_vector(label).dot(pol);
    if (std::abs(std::norm(overlap) - 1.0) <= kBellMatchTol) {
      is_bell = true;
      break;
    }
  }
  if (!is_bell) {
    throw ClassificationUndefinedError(
        "analysis is defined for Bell polarization inputs only");
  }

  Analysis result;
  const DensityMatrix input = make_pure(product_state(pol, carriers));
  const Eigen::Vector4cd phi_plus = bell_vector(BellLabel::kPhiPlus);

  const auto round1 = qnd_pbs(input);
  result.round1_equal = round1.front().outcome.equal();
  result.operations.emplace_back("qnd_pbs");
  bool logged_round1_ops = false;

  for (const QndBranch& b1 : round1) {
    if (b1.outcome.equal() != result.round1_equal) {
      throw ContractViolationError(
          "Bell input produced mixed round-one parity outcomes");
    }
    DensityMatrix state = b1.state;
    if (!b1.outcome.equal()) {
      state = sigma_x(state, Party::kBob);
    }
    state = reset_rails(hadamard_pol(state, Acting::kBoth));
    if (!logged_round1_ops) {
      if (!b1.outcome.equal()) result.operations.emplace_back("sigma_x(bob)");
      result.operations.emplace_back("hadamard_pol(both)");
      result.operations.emplace_back("reset_rails");
      result.operations.emplace_back("wdm");
      result.operations.emplace_back("qnd_pbs");
      logged_round1_ops = true;
    }

    const auto round2 = qnd_pbs(wdm(state));
    for (const QndBranch& b2 : round2) {
      TruthTableBranch entry;
      entry.round1 = b1.outcome;
      entry.round2 = b2.outcome;
      entry.probability = b1.probability * b2.probability;
      // Post-protocol polarization: the pair is usable only after the
      // frequency distinguishability is erased, as in the purification run.
      const Eigen::Matrix4cd pol = pol_marginal(frequency_erase(b2.state));
      entry.post_pol_fidelity_phi_plus =
          fidelity(Matrix(pol), Vector(phi_plus));
      result.post_pol += entry.probability * pol;
      result.branches.push_back(entry);
    }
  }
  result.operations.emplace_back("frequency_erase");

  result.round2_equal = result.branches.front().round2.equal();
  for (const TruthTableBranch& entry : result.branches) {
    if (entry.round2.equal() != result.round2_equal) {
      throw ContractViolationError(
          "Bell input produced mixed round-two parity outcomes");
    }
  }
  return result;
}

NbsaResult result_from_analysis(const Analysis& analysis) {
  NbsaResult out;
  out.classified =
      classify_from_rounds(analysis.round1_equal, analysis.round2_equal);
  out.record.round1_equal = analysis.round1_equal;
  out.record.round2_equal = analysis.round2_equal;
  out.record.operations = analysis.operations;
  out.post_pol_state = analysis.post_pol;
  return out;
}

}  // namespace

CarrierStates ideal_carriers() {
  const double s = 1.0 / std::sqrt(2.0);
  CarrierStates c;
  c.freq = Eigen::Vector4cd::Zero();
  c.freq(1) = s;  // |w1 w2>
  c.freq(2) = s;  // |w2 w1>
  c.rail = Eigen::Vector4cd::Zero();
  c.rail(0) = s;  // |r1 r1>
  c.rail(3) = s;  // |r2 r2>
  return c;
}

NbsaResult nbsa_classify(BellLabel input, const CarrierStates& carriers) {
  return nbsa_classify(Eigen::Vector4cd(bell_vector(input)), carriers);
}

NbsaResult nbsa_classify(const Eigen::Vector4cd& pol_state,
                         const CarrierStates& carriers) {
  return result_from_analysis(analyze(pol_state, carriers));
}

std::vector<TruthTableRow> nbsa_truth_table() {
  std::vector<TruthTableRow> table;
  const CarrierStates carriers = ideal_carriers();
  for (BellLabel input : kAllBellLabels) {
    const Analysis analysis =
        analyze(Eigen::Vector4cd(bell_vector(input)), carriers);
    TruthTableRow row;
    row.input = input;
    row.round1_equal = analysis.round1_equal;
    row.round2_equal = analysis.round2_equal;
    row.classified =
        classify_from_rounds(analysis.round1_equal, analysis.round2_equal);
    row.branches = analysis.branches;
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace hyperepp
