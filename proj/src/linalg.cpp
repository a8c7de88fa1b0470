#include "hyperepp/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperepp {

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd hadamard2() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  m << s, s, s, -s;
  return m;
}

std::string bell_name(BellLabel label) {
  switch (label) {
    case BellLabel::kPhiPlus:
      return "phi+";
    case BellLabel::kPhiMinus:
      return "phi-";
    case BellLabel::kPsiPlus:
      return "psi+";
    case BellLabel::kPsiMinus:
      return "psi-";
  }
  return "?";
}

BellLabel bell_from_name(const std::string& name) {
  if (name == "phi+") return BellLabel::kPhiPlus;
  if (name == "phi-") return BellLabel::kPhiMinus;
  if (name == "psi+") return BellLabel::kPsiPlus;
  if (name == "psi-") return BellLabel::kPsiMinus;
  throw std::invalid_argument("unknown Bell label: " + name);
}

Eigen::Vector4cd bell_vector(BellLabel label) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (label) {
    case BellLabel::kPhiPlus:
      v(0) = s;
      v(3) = s;
      break;
    case BellLabel::kPhiMinus:
      v(0) = s;
      v(3) = -s;
      break;
    case BellLabel::kPsiPlus:
      v(1) = s;
      v(2) = s;
      break;
    case BellLabel::kPsiMinus:
      v(1) = s;
      v(2) = -s;
      break;
  }
  return v;
}

}  // namespace hyperepp
