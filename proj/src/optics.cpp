#include "hyperepp/optics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hyperepp {

namespace {

// rho -> U rho U^dag for a 2x2 gate acting on one coordinate. Exact up to
// floating-point rounding; O(dim^2).
Matrix apply_one_coord(const Matrix& m, Coord c, const Eigen::Matrix2cd& u) {
  const int step = 1 << static_cast<int>(c);
  Matrix out = m;
  // Left multiply by U: mix row pairs differing in the coordinate bit.
  for (int i = 0; i < kDim; ++i) {
    if (i & step) continue;
    for (int j = 0; j < kDim; ++j) {
      const Complex a = out(i, j);
      const Complex b = out(i | step, j);
      out(i, j) = u(0, 0) * a + u(0, 1) * b;
      out(i | step, j) = u(1, 0) * a + u(1, 1) * b;
    }
  }
  // Right multiply by U^dag: mix column pairs.
  for (int j = 0; j < kDim; ++j) {
    if (j & step) continue;
    for (int i = 0; i < kDim; ++i) {
      const Complex a = out(i, j);
      const Complex b = out(i, j | step);
      out(i, j) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
      out(i, j | step) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
    }
  }
  return out;
}

// rho -> P rho P^dag for a basis permutation i -> perm(i).
template <typename PermFn>
Matrix apply_permutation(const Matrix& m, PermFn perm) {
  Matrix out = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      out(perm(i), perm(j)) = m(i, j);
    }
  }
  return out;
}

template <typename PermFn>
Matrix permutation_matrix(PermFn perm) {
  Matrix p = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) p(perm(i), i) = 1.0;
  return p;
}

Matrix one_coord_matrix(Coord c, const Eigen::Matrix2cd& u) {
  Matrix out = Matrix::Zero(kDim, kDim);
  const int step = 1 << static_cast<int>(c);
  for (int i = 0; i < kDim; ++i) {
    const int bi = (i & step) ? 1 : 0;
    out(i, i) = u(bi, bi);
    out(i, i ^ step) = u(bi, 1 - bi);
  }
  return out;
}

// The probe picks up theta exactly when the polarization bit equals the rail
// bit on that party's side.
bool party_fires_theta(int index, Party p) {
  return coord_bit(index, pol_coord(p)) == coord_bit(index, rail_coord(p));
}

bool in_qnd_support(int index, bool alice_theta, bool bob_theta) {
  return party_fires_theta(index, Party::kAlice) == alice_theta &&
         party_fires_theta(index, Party::kBob) == bob_theta;
}

int qnd_relabel(int index, bool alice_theta, bool bob_theta) {
  index = with_coord(index, Coord::kRailA, alice_theta ? 1 : 0);
  return with_coord(index, Coord::kRailB, bob_theta ? 1 : 0);
}

constexpr std::array<std::pair<bool, bool>, 4> kQndOutcomeOrder = {
    std::pair{true, true}, std::pair{true, false}, std::pair{false, true},
    std::pair{false, false}};

void validate_routing(const RoutingMap& routing) {
  if (routing.alice[0] == routing.alice[1] ||
      routing.bob[0] == routing.bob[1]) {
    throw std::invalid_argument("WDM routing map must be a bijection on {0,1}");
  }
  for (int v : {routing.alice[0], routing.alice[1], routing.bob[0],
                routing.bob[1]}) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("WDM routing map entries must be rail bits");
    }
  }
}

int wdm_permute(int i, const RoutingMap& routing) {
  // rail ^= map(freq): equals rail := map(freq) on reset rails and keeps the
  // element a permutation everywhere.
  const int ra =
      coord_bit(i, Coord::kRailA) ^ routing.alice[coord_bit(i, Coord::kFreqA)];
  const int rb =
      coord_bit(i, Coord::kRailB) ^ routing.bob[coord_bit(i, Coord::kFreqB)];
  i = with_coord(i, Coord::kRailA, ra);
  return with_coord(i, Coord::kRailB, rb);
}

int erase_relabel(int i) {
  i = with_coord(i, Coord::kFreqA, 0);
  return with_coord(i, Coord::kFreqB, 0);
}

}  // namespace

std::vector<QndBranch> qnd_pbs(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  std::vector<QndBranch> out;
  for (const auto& [at, bt] : kQndOutcomeOrder) {
    double p = 0.0;
    for (int i = 0; i < kDim; ++i) {
      if (in_qnd_support(i, at, bt)) p += m(i, i).real();
    }
    if (p < kZeroBranchTol) continue;
    Matrix post = Matrix::Zero(kDim, kDim);
    for (int i = 0; i < kDim; ++i) {
      if (!in_qnd_support(i, at, bt)) continue;
      for (int j = 0; j < kDim; ++j) {
        if (!in_qnd_support(j, at, bt)) continue;
        post(qnd_relabel(i, at, bt), qnd_relabel(j, at, bt)) = m(i, j) / p;
      }
    }
    out.push_back(QndBranch{QndOutcome{at, bt, at ? 1 : 0, bt ? 1 : 0}, p,
                            DensityMatrix(std::move(post))});
  }
  return out;
}

KrausSet qnd_kraus_set() {
  KrausSet set;
  for (const auto& [at, bt] : kQndOutcomeOrder) {
    Matrix k = Matrix::Zero(kDim, kDim);
    for (int i = 0; i < kDim; ++i) {
      if (in_qnd_support(i, at, bt)) k(qnd_relabel(i, at, bt), i) = 1.0;
    }
    set.operators.push_back(std::move(k));
  }
  return set;
}

DensityMatrix wdm(const DensityMatrix& rho, const RoutingMap& routing) {
  validate_routing(routing);
  return DensityMatrix(apply_permutation(
      rho.matrix(), [&](int i) { return wdm_permute(i, routing); }));
}

DensityMatrix hadamard_pol(const DensityMatrix& rho, Acting who) {
  Matrix m = rho.matrix();
  if (who == Acting::kAlice || who == Acting::kBoth) {
    m = apply_one_coord(m, Coord::kPolA, hadamard2());
  }
  if (who == Acting::kBob || who == Acting::kBoth) {
    m = apply_one_coord(m, Coord::kPolB, hadamard2());
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix sigma_x(const DensityMatrix& rho, Party party) {
  return DensityMatrix(
      apply_one_coord(rho.matrix(), pol_coord(party), pauli_x()));
}

DensityMatrix local_phase(const DensityMatrix& rho, Coord coordinate,
                          double phi) {
  const Complex phase = std::polar(1.0, phi);
  Matrix m = rho.matrix();
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      const int bi = coord_bit(i, coordinate);
      const int bj = coord_bit(j, coordinate);
      if (bi == bj) continue;
      m(i, j) *= bi ? phase : std::conj(phase);
    }
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix frequency_erase(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      out(erase_relabel(i), erase_relabel(j)) += m(i, j);
    }
  }
  const double p = out.trace().real();
  if (p < kZeroBranchTol) {
    throw InvalidStateError(
        "state has no overlap with the up-conversion acceptance mode");
  }
  out /= p;
  return DensityMatrix(std::move(out));
}

Matrix frequency_erase_kraus() {
  Matrix k = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) k(erase_relabel(i), i) += 1.0;
  return k;
}

DensityMatrix reset_rails(const DensityMatrix& rho) {
  // The rails must be deterministic: the rail marginal concentrated on one
  // basis pair.
  const Matrix& m = rho.matrix();
  std::array<double, 4> rail_weight{0, 0, 0, 0};
  for (int i = 0; i < kDim; ++i) {
    rail_weight[2 * coord_bit(i, Coord::kRailA) + coord_bit(i, Coord::kRailB)] +=
        m(i, i).real();
  }
  int best = 0;
  for (int r = 1; r < 4; ++r) {
    if (rail_weight[r] > rail_weight[best]) best = r;
  }
  if (rail_weight[best] < 1.0 - 1e-10) {
    throw InvalidStateError(
        "rails are not deterministic; cannot reset to rail-1");
  }
  const int ra = best >> 1;
  const int rb = best & 1;
  return DensityMatrix(apply_permutation(m, [&](int i) {
    i = with_coord(i, Coord::kRailA, coord_bit(i, Coord::kRailA) ^ ra);
    return with_coord(i, Coord::kRailB, coord_bit(i, Coord::kRailB) ^ rb);
  }));
}

Matrix hadamard_pol_matrix(Acting who) {
  Matrix u = Matrix::Identity(kDim, kDim);
  if (who == Acting::kAlice || who == Acting::kBoth) {
    u = one_coord_matrix(Coord::kPolA, hadamard2()) * u;
  }
  if (who == Acting::kBob || who == Acting::kBoth) {
    u = one_coord_matrix(Coord::kPolB, hadamard2()) * u;
  }
  return u;
}

Matrix sigma_x_matrix(Party party) {
  return one_coord_matrix(pol_coord(party), pauli_x());
}

Matrix local_phase_matrix(Coord coordinate, double phi) {
  Matrix u = Matrix::Identity(kDim, kDim);
  const Complex phase = std::polar(1.0, phi);
  for (int i = 0; i < kDim; ++i) {
    if (coord_bit(i, coordinate)) u(i, i) = phase;
  }
  return u;
}

Matrix wdm_matrix(const RoutingMap& routing) {
  validate_routing(routing);
  return permutation_matrix([&](int i) { return wdm_permute(i, routing); });
}

Matrix reset_rails_matrix(int rail_a, int rail_b) {
  return permutation_matrix([&](int i) {
    i = with_coord(i, Coord::kRailA, coord_bit(i, Coord::kRailA) ^ rail_a);
    return with_coord(i, Coord::kRailB, coord_bit(i, Coord::kRailB) ^ rail_b);
  });
}

namespace {

Party party_from_name(const std::string& name) {
  if (name == "alice") return Party::kAlice;
  if (name == "bob") return Party::kBob;
  throw std::invalid_argument("unknown party: " + name);
}

Acting acting_from_name(const std::string& name) {
  if (name == "alice") return Acting::kAlice;
  if (name == "bob") return Acting::kBob;
  if (name == "both") return Acting::kBoth;
  throw std::invalid_argument("unknown party selector: " + name);
}

template <typename T>
const T& require(const std::optional<T>& field, const char* what) {
  if (!field) {
    throw std::invalid_argument(std::string("element descriptor missing ") +
                                what);
  }
  return *field;
}

}  // namespace

DensityMatrix apply_element(const DensityMatrix& rho,
                            const ElementDescriptor& desc) {
  if (desc.element == "hadamard_pol") {
    return hadamard_pol(rho, acting_from_name(require(desc.party, "party")));
  }
  if (desc.element == "sigma_x") {
    return sigma_x(rho, party_from_name(require(desc.party, "party")));
  }
  if (desc.element == "local_phase") {
    return local_phase(rho,
                       coord_from_name(require(desc.coordinate, "coordinate")),
                       require(desc.phi, "phi"));
  }
  if (desc.element == "wdm") {
    return wdm(rho, desc.routing.value_or(kDefaultRouting));
  }
  if (desc.element == "frequency_erase") return frequency_erase(rho);
  if (desc.element == "reset_rails") return reset_rails(rho);
  if (desc.element == "qnd_pbs") {
    throw std::invalid_argument(
        "qnd_pbs is a measurement; use apply_measurement_element");
  }
  throw std::invalid_argument("unknown element: " + desc.element);
}

std::vector<QndBranch> apply_measurement_element(
    const DensityMatrix& rho, const ElementDescriptor& desc) {
  if (desc.element == "qnd_pbs") return qnd_pbs(rho);
  throw std::invalid_argument("element is not a measurement: " + desc.element);
}

DensityMatrix apply_pipeline(const DensityMatrix& rho,
                             const std::vector<ElementDescriptor>& pipeline) {
  DensityMatrix state = rho;
  for (const ElementDescriptor& desc : pipeline) {
    state = apply_element(state, desc);
  }
  return state;
}

}  // namespace hyperepp
