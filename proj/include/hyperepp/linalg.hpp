#pragma once
// Small dense complex linear-algebra helpers shared by all modules.

#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "hyperepp/basis.hpp"

namespace hyperepp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Contract tolerances. Unitaries are exact to 1e-12; normalization drift is
// repaired only by the renormalization after measurement.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;  // min eigenvalue >= -kPsdTol
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kKrausTol = 1e-12;
inline constexpr double kZeroBranchTol = 1e-14;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline bool approx_hermitian(const Matrix& m, double tol = kHermitianTol) {
  return max_abs(m - m.adjoint()) <= tol;
}

inline bool approx_identity(const Matrix& m, double tol) {
  return max_abs(m - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

inline bool approx_unitary(const Matrix& u, double tol = kUnitaryTol) {
  return u.rows() == u.cols() && approx_identity(u.adjoint() * u, tol);
}

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard2();

// The four polarization Bell states over (pol_A, pol_B) ordered HH,HV,VH,VV.
enum class BellLabel { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::kPhiPlus, BellLabel::kPhiMinus, BellLabel::kPsiPlus,
    BellLabel::kPsiMinus};

// Serialized as "phi+", "phi-", "psi+", "psi-".
std::string bell_name(BellLabel label);
BellLabel bell_from_name(const std::string& name);

Eigen::Vector4cd bell_vector(BellLabel label);

}  // namespace hyperepp
