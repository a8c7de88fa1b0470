#pragma once
// Independent brute-force oracles used to freeze derived expected values.
// These deliberately avoid the library's implementation paths.

#include <cmath>
#include <utility>

#include "hyperepp/linalg.hpp"

namespace hyperepp::test {

// Brute-force two-pair purification round on the 16-dimensional polarization
// space of photons (1,2,3,4). Pair (1,2) is kept, pair (3,4) is sacrificial;
// Alice holds photons 1 and 3, Bob holds 2 and 4. Each pair starts in
// F|Phi+><Phi+| + (1-F)|Psi+><Psi+|. Protocol: QND parity of (1,3) and of
// (2,4), postselect on matching parities, X-basis measurement of (3,4) with
// sigma_z feed-forward on photon 2 when the outcomes differ.
// Returns (fidelity of pair (1,2) to Phi+, success probability).
inline std::pair<double, double> brute_force_purify_round(double f) {
  const int dim = 16;  // bits: photon1 photon2 photon3 photon4, MSB first
  const double s = 1.0 / std::sqrt(2.0);

  Eigen::Vector4cd phi_plus = Eigen::Vector4cd::Zero();
  phi_plus(0) = s;
  phi_plus(3) = s;
  Eigen::Vector4cd psi_plus = Eigen::Vector4cd::Zero();
  psi_plus(1) = s;
  psi_plus(2) = s;

  const Eigen::Matrix4cd pair = f * phi_plus * phi_plus.adjoint() +
                                (1.0 - f) * psi_plus * psi_plus.adjoint();
  Matrix rho = kron(pair, pair);  // (photons 1,2) (x) (photons 3,4)

  const auto bit = [](int idx, int photon) {  // photon in 1..4
    return (idx >> (4 - photon)) & 1;
  };

  // Postselect matching QND parities: (b1 xor b3) == (b2 xor b4).
  for (int i = 0; i < dim; ++i) {
    const bool keep_i =
        (bit(i, 1) ^ bit(i, 3)) == (bit(i, 2) ^ bit(i, 4));
    for (int j = 0; j < dim; ++j) {
      const bool keep_j =
          (bit(j, 1) ^ bit(j, 3)) == (bit(j, 2) ^ bit(j, 4));
      if (!keep_i || !keep_j) rho(i, j) = 0.0;
    }
  }
  const double p_success = rho.trace().real();
  if (p_success <= 0.0) return {0.0, 0.0};

  // X-basis measurement of photons 3 and 4.
  Eigen::Vector2cd x_basis[2];
  x_basis[0] << s, s;   // |+>
  x_basis[1] << s, -s;  // |->

  Eigen::Matrix4cd kept = Eigen::Matrix4cd::Zero();
  for (int m3 = 0; m3 < 2; ++m3) {
    for (int m4 = 0; m4 < 2; ++m4) {
      // Collapse photons 3,4 onto the outcome and reduce to pair (1,2).
      Eigen::Matrix4cd reduced = Eigen::Matrix4cd::Zero();
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          const Complex wi = std::conj(x_basis[m3](bit(i, 3))) *
                             std::conj(x_basis[m4](bit(i, 4)));
          const Complex wj = x_basis[m3](bit(j, 3)) * x_basis[m4](bit(j, 4));
          reduced(2 * bit(i, 1) + bit(i, 2), 2 * bit(j, 1) + bit(j, 2)) +=
              wi * rho(i, j) * wj;
        }
      }
      if (m3 != m4) {
        // Feed-forward sigma_z on Bob's kept photon (photon 2).
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) {
            if ((i & 1) != (j & 1)) reduced(i, j) = -reduced(i, j);
          }
        }
      }
      kept += reduced;
    }
  }

  kept /= p_success;
  const double fidelity_after =
      (phi_plus.adjoint() * kept * phi_plus)(0, 0).real();
  return {fidelity_after, p_success};
}

// Simpson-rule time average of (1 + cos(x))/2 for x swept uniformly through
// [-delta, delta]; independent quadrature oracle for F_f.
inline double simpson_uniform_ff(double delta, int intervals = 10000) {
  if (delta == 0.0) return 1.0;
  const int n = intervals % 2 == 0 ? intervals : intervals + 1;
  const double h = 2.0 * delta / n;
  auto f = [](double x) { return 0.5 * (1.0 + std::cos(x)); };
  double sum = f(-delta) + f(delta);
  for (int i = 1; i < n; ++i) {
    sum += f(-delta + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0 / (2.0 * delta);
}

}  // namespace hyperepp::test
