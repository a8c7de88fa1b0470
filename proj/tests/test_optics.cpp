#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperepp/optics.hpp"
#include "test_support.hpp"

using namespace hyperepp;
using namespace hyperepp::test;

namespace {

DensityMatrix bell_carrier_state(BellLabel label, double dphi_s = 0.0,
                                 double dphi_f = 0.0) {
  return make_pure(product_state(bell_vector(label), freq_carrier(dphi_f),
                                 rail_carrier(dphi_s)));
}

const QndBranch* find_branch(const std::vector<QndBranch>& branches,
                             bool alice_theta, bool bob_theta) {
  for (const QndBranch& b : branches) {
    if (b.outcome.alice_theta == alice_theta &&
        b.outcome.bob_theta == bob_theta) {
      return &b;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("qnd_pbs on Phi+ carriers: equal outcomes, rails a2b2/a1b1") {
  const auto branches = qnd_pbs(bell_carrier_state(BellLabel::kPhiPlus));
  REQUIRE(branches.size() == 2);

  const QndBranch* theta_theta = find_branch(branches, true, true);
  const QndBranch* zero_zero = find_branch(branches, false, false);
  REQUIRE(theta_theta != nullptr);
  REQUIRE(zero_zero != nullptr);

  CHECK(std::abs(theta_theta->probability - 0.5) <= 1e-12);
  CHECK(std::abs(zero_zero->probability - 0.5) <= 1e-12);
  CHECK(theta_theta->outcome.alice_rail == 1);  // a2
  CHECK(theta_theta->outcome.bob_rail == 1);    // b2
  CHECK(zero_zero->outcome.alice_rail == 0);    // a1
  CHECK(zero_zero->outcome.bob_rail == 0);      // b1

  // Both branches keep (|HH>+|VV>)/sqrt2 with the frequency carrier intact.
  Eigen::Vector4cd rail_a2b2 = Eigen::Vector4cd::Zero();
  rail_a2b2(3) = 1.0;
  const Vector expected_a2b2 = product_state(
      bell_vector(BellLabel::kPhiPlus), freq_carrier(), rail_a2b2);
  CHECK(std::abs(fidelity(theta_theta->state, expected_a2b2) - 1.0) <= 1e-12);

  Eigen::Vector4cd rail_a1b1 = Eigen::Vector4cd::Zero();
  rail_a1b1(0) = 1.0;
  const Vector expected_a1b1 = product_state(
      bell_vector(BellLabel::kPhiPlus), freq_carrier(), rail_a1b1);
  CHECK(std::abs(fidelity(zero_zero->state, expected_a1b1) - 1.0) <= 1e-12);
}

TEST_CASE("qnd_pbs on Psi+ carriers: unequal outcomes, rails a2b1/a1b2") {
  const auto branches = qnd_pbs(bell_carrier_state(BellLabel::kPsiPlus));
  REQUIRE(branches.size() == 2);

  const QndBranch* theta_zero = find_branch(branches, true, false);
  const QndBranch* zero_theta = find_branch(branches, false, true);
  REQUIRE(theta_zero != nullptr);
  REQUIRE(zero_theta != nullptr);
  CHECK(std::abs(theta_zero->probability - 0.5) <= 1e-12);
  CHECK(std::abs(zero_theta->probability - 0.5) <= 1e-12);
  CHECK(theta_zero->outcome.alice_rail == 1);  // a2
  CHECK(theta_zero->outcome.bob_rail == 0);    // b1

  Eigen::Vector4cd rail_a2b1 = Eigen::Vector4cd::Zero();
  rail_a2b1(2) = 1.0;
  const Vector expected = product_state(bell_vector(BellLabel::kPsiPlus),
                                        freq_carrier(), rail_a2b1);
  CHECK(std::abs(fidelity(theta_zero->state, expected) - 1.0) <= 1e-12);
}

TEST_CASE("qnd_pbs on a product state follows the parity rule directly") {
  // |H>_A |V>_B on rails a1b1: Alice pol 0 == rail 0 -> theta; Bob pol 1 !=
  // rail 0 -> no shift. One branch, probability one.
  Eigen::Vector4cd pol = Eigen::Vector4cd::Zero();
  pol(1) = 1.0;  // |HV>
  Eigen::Vector4cd rails = Eigen::Vector4cd::Zero();
  rails(0) = 1.0;  // a1b1
  const auto branches =
      qnd_pbs(make_pure(product_state(pol, freq_carrier(), rails)));
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome.alice_theta);
  CHECK_FALSE(branches[0].outcome.bob_theta);
  CHECK(std::abs(branches[0].probability - 1.0) <= 1e-12);
}

TEST_CASE("qnd_pbs never yields equal outcomes on bit-flipped support") {
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 20; ++trial) {
    // Polarization support in {HV, VH}, rails in {a1b1, a2b2}.
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    Eigen::Vector4cd pol = Eigen::Vector4cd::Zero();
    pol(1) = std::polar(std::cos(angle(g) / 2), angle(g));
    pol(2) = std::polar(std::sqrt(1 - std::norm(pol(1))), angle(g));
    const auto branches = qnd_pbs(
        make_pure(product_state(pol, freq_carrier(), rail_carrier(angle(g)))));
    for (const QndBranch& b : branches) {
      CHECK_FALSE(b.outcome.equal());
    }
  }
}

TEST_CASE("qnd_pbs branch probabilities sum to one and rails are pure") {
  std::mt19937_64 g(22);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_mixed_state(g);
    double total = 0.0;
    for (const QndBranch& b : qnd_pbs(rho)) {
      total += b.probability;
      // Emitted rails are deterministic and equal the outcome bits.
      for (int i = 0; i < kDim; ++i) {
        if (coord_bit(i, Coord::kRailA) != b.outcome.alice_rail ||
            coord_bit(i, Coord::kRailB) != b.outcome.bob_rail) {
          CHECK(std::abs(b.state.matrix()(i, i)) <= 1e-14);
        }
      }
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("qnd_pbs agrees with measure() over its Kraus set") {
  const KrausSet set = qnd_kraus_set();
  CHECK(set.is_complete());

  std::mt19937_64 g(23);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_mixed_state(g);
    const auto fast = qnd_pbs(rho);
    const auto generic = measure(rho, set);
    REQUIRE(fast.size() == generic.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(std::abs(fast[i].probability - generic[i].probability) <= 1e-12);
      CHECK(max_abs(fast[i].state.matrix() - generic[i].state.matrix()) <=
            1e-12);
    }
  }
}

TEST_CASE("wdm routes frequencies to the documented rails") {
  // Photon pair in |w1>_A |w2>_B with rails reset: Alice w1 -> c1 (rail 0),
  // Bob w2 -> d1 (rail 0).
  Eigen::Vector4cd freq = Eigen::Vector4cd::Zero();
  freq(1) = 1.0;  // (w1, w2)
  Eigen::Vector4cd rails = Eigen::Vector4cd::Zero();
  rails(0) = 1.0;
  Eigen::Vector4cd pol = Eigen::Vector4cd::Zero();
  pol(0) = 1.0;
  DensityMatrix routed = wdm(make_pure(product_state(pol, freq, rails)));
  const int expect_index = BasisLabel{0, 0, 0, 1, 0, 0}.index();
  CHECK(std::abs(routed.matrix()(expect_index, expect_index).real() - 1.0) <=
        1e-12);

  // |w1>_B goes to d2 (rail 1).
  freq = Eigen::Vector4cd::Zero();
  freq(2) = 1.0;  // (w2, w1): Alice w2 -> c2, Bob w1 -> d2
  routed = wdm(make_pure(product_state(pol, freq, rails)));
  const int expect_index2 = BasisLabel{0, 0, 1, 0, 1, 1}.index();
  CHECK(std::abs(routed.matrix()(expect_index2, expect_index2).real() - 1.0) <=
        1e-12);
}

TEST_CASE("wdm composed with qnd_pbs reproduces the quoted second-step branches") {
  Eigen::Vector4cd rails = Eigen::Vector4cd::Zero();
  rails(0) = 1.0;  // reset

  // Psi+ (x) Psi_f never gives equal outcomes; the theta/0 branch exits c2d1
  // in (|H w1, V w2> + |V w2, H w1>)/sqrt2.
  const auto unequal = qnd_pbs(wdm(make_pure(
      product_state(bell_vector(BellLabel::kPsiPlus), freq_carrier(), rails))));
  REQUIRE(unequal.size() == 2);
  for (const QndBranch& b : unequal) CHECK_FALSE(b.outcome.equal());
  const QndBranch* c2d1 = find_branch(unequal, true, false);
  REQUIRE(c2d1 != nullptr);
  Vector expected = Vector::Zero(kDim);
  expected(BasisLabel{0, 1, 0, 1, 1, 0}.index()) = 1.0 / std::sqrt(2.0);
  expected(BasisLabel{1, 0, 1, 0, 1, 0}.index()) = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(fidelity(c2d1->state, expected) - 1.0) <= 1e-12);

  // Phi+ (x) Psi_f gives equal outcomes; c1d1 carries
  // (|H w2, H w1> + |V w1, V w2>)/sqrt2.
  const auto equal = qnd_pbs(wdm(make_pure(
      product_state(bell_vector(BellLabel::kPhiPlus), freq_carrier(), rails))));
  REQUIRE(equal.size() == 2);
  const QndBranch* c1d1 = find_branch(equal, false, false);
  REQUIRE(c1d1 != nullptr);
  Vector expected2 = Vector::Zero(kDim);
  expected2(BasisLabel{0, 0, 1, 0, 0, 0}.index()) = 1.0 / std::sqrt(2.0);
  expected2(BasisLabel{1, 1, 0, 1, 0, 0}.index()) = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(fidelity(c1d1->state, expected2) - 1.0) <= 1e-12);
}

TEST_CASE("wdm applied twice with the same map is the identity") {
  std::mt19937_64 g(24);
  const DensityMatrix rho = random_mixed_state(g);
  const DensityMatrix back = wdm(wdm(rho));
  CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-12);
}

TEST_CASE("wdm rejects non-bijective maps") {
  std::mt19937_64 g(25);
  RoutingMap broken;
  broken.alice = {0, 0};
  CHECK_THROWS_AS(wdm(random_mixed_state(g), broken), std::invalid_argument);
}

TEST_CASE("hadamard_pol maps Bell states as a quarter-wave plate pair") {
  // Phi- -> Psi+ and Phi+ -> Phi+; the 4x4 oracle is computed right here.
  const Eigen::Matrix2cd h = hadamard2();
  const Eigen::Matrix4cd hh = Eigen::kroneckerProduct(h, h).eval();
  for (BellLabel in : {BellLabel::kPhiMinus, BellLabel::kPhiPlus}) {
    const Eigen::Vector4cd expected_pol = hh * bell_vector(in);
    const DensityMatrix out =
        hadamard_pol(bell_carrier_state(in), Acting::kBoth);
    const Vector expected =
        product_state(expected_pol, freq_carrier(), rail_carrier());
    CHECK(std::abs(fidelity(out, expected) - 1.0) <= 1e-12);
  }
  const DensityMatrix out =
      hadamard_pol(bell_carrier_state(BellLabel::kPhiMinus), Acting::kBoth);
  const Vector psi_plus = product_state(bell_vector(BellLabel::kPsiPlus),
                                        freq_carrier(), rail_carrier());
  CHECK(std::abs(fidelity(out, psi_plus) - 1.0) <= 1e-12);
}

TEST_CASE("hadamard_pol applied twice is the identity") {
  std::mt19937_64 g(26);
  const DensityMatrix rho = random_mixed_state(g);
  const DensityMatrix back =
      hadamard_pol(hadamard_pol(rho, Acting::kBoth), Acting::kBoth);
  CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-12);
}

TEST_CASE("sigma_x corrects bit-flip errors") {
  const DensityMatrix psi_plus = bell_carrier_state(BellLabel::kPsiPlus);
  const DensityMatrix corrected = sigma_x(psi_plus, Party::kBob);
  const Vector phi_plus = product_state(bell_vector(BellLabel::kPhiPlus),
                                        freq_carrier(), rail_carrier());
  CHECK(std::abs(fidelity(corrected, phi_plus) - 1.0) <= 1e-12);

  // Psi- keeps a phase-flip error: it lands on Phi- (global phase aside).
  const DensityMatrix psi_minus = bell_carrier_state(BellLabel::kPsiMinus);
  const Vector phi_minus = product_state(bell_vector(BellLabel::kPhiMinus),
                                         freq_carrier(), rail_carrier());
  CHECK(std::abs(fidelity(sigma_x(psi_minus, Party::kBob), phi_minus) - 1.0) <=
        1e-12);

  std::mt19937_64 g(27);
  const DensityMatrix rho = random_mixed_state(g);
  const DensityMatrix twice =
      sigma_x(sigma_x(rho, Party::kAlice), Party::kAlice);
  CHECK(max_abs(twice.matrix() - rho.matrix()) <= 1e-12);
}

TEST_CASE("local_phase dephases the flagged coordinate") {
  std::mt19937_64 g(28);
  const DensityMatrix rho = random_mixed_state(g);
  CHECK(max_abs(local_phase(rho, Coord::kRailB, 0.0).matrix() -
                rho.matrix()) <= 1e-15);

  // The spatial carrier picks up exp(i dphi_s) on |r2 r2>.
  const double dphi_s = 0.7;
  const DensityMatrix carrier = bell_carrier_state(BellLabel::kPhiPlus);
  const DensityMatrix shifted = local_phase(carrier, Coord::kRailB, dphi_s);
  const Vector expected = product_state(bell_vector(BellLabel::kPhiPlus),
                                        freq_carrier(), rail_carrier(dphi_s));
  CHECK(std::abs(fidelity(shifted, expected) - 1.0) <= 1e-12);

  const DensityMatrix back =
      local_phase(local_phase(rho, Coord::kFreqA, 1.3), Coord::kFreqA, -1.3);
  CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-12);
}

TEST_CASE("frequency_erase keeps polarization coherence") {
  // (|H w1, H w2> + |V w2, V w1>)/sqrt2 -> (|HH>+|VV>)/sqrt2 (x) |w1 w1>.
  for (double dphi_f : {0.0, 0.9}) {
    Vector psi = Vector::Zero(kDim);
    psi(BasisLabel{0, 0, 0, 1, 1, 1}.index()) = 1.0 / std::sqrt(2.0);
    psi(BasisLabel{1, 1, 1, 0, 1, 1}.index()) =
        std::polar(1.0 / std::sqrt(2.0), dphi_f);
    const DensityMatrix erased = frequency_erase(make_pure(psi));

    Vector expected = Vector::Zero(kDim);
    expected(BasisLabel{0, 0, 0, 0, 1, 1}.index()) = 1.0 / std::sqrt(2.0);
    expected(BasisLabel{1, 1, 0, 0, 1, 1}.index()) =
        std::polar(1.0 / std::sqrt(2.0), dphi_f);
    CHECK(std::abs(fidelity(erased, expected.normalized()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("frequency_erase leaves pol/rail marginals of product states") {
  std::mt19937_64 g(29);
  // rho = sigma_polrail (x) tau_freq with tau the maximally mixed frequency
  // state; erasing frequency must not touch the other marginals.
  const Eigen::Vector4cd pol = random_pure_vector(g, 4);
  const Eigen::Vector4cd rail = random_pure_vector(g, 4);
  Matrix m = Matrix::Zero(kDim, kDim);
  for (int fa = 0; fa < 2; ++fa) {
    for (int fb = 0; fb < 2; ++fb) {
      Eigen::Vector4cd freq = Eigen::Vector4cd::Zero();
      freq(2 * fa + fb) = 1.0;
      const Vector psi = product_state(pol, freq, rail);
      m += 0.25 * (psi * psi.adjoint());
    }
  }
  const DensityMatrix rho(m);
  const DensityMatrix erased = frequency_erase(rho);
  CHECK(max_abs(partial_trace(erased, KeepSet{.pol = true, .rail = true}) -
                partial_trace(rho, KeepSet{.pol = true, .rail = true})) <=
        1e-12);
  // Frequency coordinates end in the fixed product state |w1 w1>.
  const Matrix freq_marginal = partial_trace(erased, KeepSet{.freq = true});
  CHECK(std::abs(freq_marginal(0, 0).real() - 1.0) <= 1e-12);
}

TEST_CASE("frequency_erase is isometric on pipeline-correlated states") {
  // Per-party frequency determined by polarization: the relabeling preserves
  // the norm exactly.
  const Matrix k = frequency_erase_kraus();
  for (double dphi_f : {0.0, 1.2, 2.8}) {
    Vector psi = Vector::Zero(kDim);
    psi(BasisLabel{0, 0, 0, 1, 1, 1}.index()) = 1.0 / std::sqrt(2.0);
    psi(BasisLabel{1, 1, 1, 0, 1, 1}.index()) =
        std::polar(1.0 / std::sqrt(2.0), dphi_f);
    CHECK(std::abs((k * psi).norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("reset_rails relabels deterministic rails and rejects others") {
  Eigen::Vector4cd rails = Eigen::Vector4cd::Zero();
  rails(3) = 1.0;  // r2 r2
  const DensityMatrix rho = make_pure(
      product_state(bell_vector(BellLabel::kPhiPlus), freq_carrier(), rails));
  const DensityMatrix reset = reset_rails(rho);
  Eigen::Vector4cd reset_rail = Eigen::Vector4cd::Zero();
  reset_rail(0) = 1.0;
  const Vector expected = product_state(bell_vector(BellLabel::kPhiPlus),
                                        freq_carrier(), reset_rail);
  CHECK(std::abs(fidelity(reset, expected) - 1.0) <= 1e-12);

  // Entangled rails cannot be reset.
  CHECK_THROWS_AS(reset_rails(bell_carrier_state(BellLabel::kPhiPlus)),
                  InvalidStateError);
}

TEST_CASE("all deterministic elements are exactly unitary") {
  for (const Matrix& u :
       {hadamard_pol_matrix(Acting::kBoth), hadamard_pol_matrix(Acting::kAlice),
        sigma_x_matrix(Party::kBob), local_phase_matrix(Coord::kRailB, 0.7),
        local_phase_matrix(Coord::kFreqA, 2.9), wdm_matrix(),
        reset_rails_matrix(1, 0)}) {
    CHECK(approx_unitary(u));
  }
}

TEST_CASE("dense element matrices agree with the fast paths") {
  std::mt19937_64 g(30);
  const DensityMatrix rho = random_mixed_state(g);

  CHECK(max_abs(hadamard_pol(rho, Acting::kBoth).matrix() -
                apply_unitary(rho, hadamard_pol_matrix(Acting::kBoth))
                    .matrix()) <= 1e-12);
  CHECK(max_abs(sigma_x(rho, Party::kBob).matrix() -
                apply_unitary(rho, sigma_x_matrix(Party::kBob)).matrix()) <=
        1e-12);
  CHECK(max_abs(local_phase(rho, Coord::kRailB, 1.1).matrix() -
                apply_unitary(rho, local_phase_matrix(Coord::kRailB, 1.1))
                    .matrix()) <= 1e-12);
  CHECK(max_abs(wdm(rho).matrix() -
                apply_unitary(rho, wdm_matrix()).matrix()) <= 1e-12);
}

TEST_CASE("element descriptors apply the same operations") {
  std::mt19937_64 g(31);
  const DensityMatrix rho = random_mixed_state(g);

  ElementDescriptor h{.element = "hadamard_pol"};
  h.party = "both";
  CHECK(max_abs(apply_element(rho, h).matrix() -
                hadamard_pol(rho, Acting::kBoth).matrix()) <= 1e-15);

  ElementDescriptor phase{.element = "local_phase"};
  phase.coordinate = "rail_b";
  phase.phi = 0.4;
  CHECK(max_abs(apply_element(rho, phase).matrix() -
                local_phase(rho, Coord::kRailB, 0.4).matrix()) <= 1e-15);

  ElementDescriptor qnd{.element = "qnd_pbs"};
  CHECK_THROWS_AS(apply_element(rho, qnd), std::invalid_argument);
  CHECK(apply_measurement_element(rho, qnd).size() == qnd_pbs(rho).size());

  ElementDescriptor unknown{.element = "beam_splitter"};
  CHECK_THROWS_AS(apply_element(rho, unknown), std::invalid_argument);
}
