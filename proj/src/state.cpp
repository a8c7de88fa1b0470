#include "hyperepp/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hyperepp {

DensityMatrix::DensityMatrix()
    : m_(Matrix::Identity(kDim, kDim) / double(kDim)) {}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != kDim || m_.cols() != kDim) {
    throw InvalidStateError("density matrix must be 64x64");
  }
  if (!approx_hermitian(m_)) {
    throw InvalidStateError("density matrix is not Hermitian within 1e-12");
  }
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol ||
      std::abs(m_.trace().imag()) > kTraceTol) {
    throw InvalidStateError("density matrix trace differs from one");
  }
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool KrausSet::is_complete(double tol) const {
  if (operators.empty()) return false;
  const auto n = operators.front().cols();
  Matrix sum = Matrix::Zero(n, n);
  for (const Matrix& k : operators) {
    if (k.cols() != n) return false;
    sum += k.adjoint() * k;
  }
  return approx_identity(sum, tol);
}

DensityMatrix make_pure(const Vector& amplitudes) {
  if (amplitudes.size() != kDim) {
    throw InvalidStateError("amplitude vector must have 64 components");
  }
  const double norm = amplitudes.norm();
  if (norm == 0.0) {
    throw InvalidStateError("cannot build a state from the zero vector");
  }
  Vector psi = amplitudes / norm;
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u) {
  if (u.rows() != kDim || u.cols() != kDim) {
    throw ContractViolationError("unitary must be 64x64");
  }
  if (!approx_unitary(u)) {
    throw ContractViolationError("operator is not unitary within 1e-12");
  }
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

std::vector<MeasureBranch> measure(const DensityMatrix& rho,
                                   const KrausSet& kraus) {
  for (const Matrix& k : kraus.operators) {
    if (k.rows() != kDim || k.cols() != kDim) {
      throw ContractViolationError("Kraus operators must be 64x64");
    }
  }
  if (!kraus.is_complete()) {
    throw ContractViolationError("Kraus set is not complete within 1e-12");
  }
  std::vector<MeasureBranch> out;
  for (int k = 0; k < static_cast<int>(kraus.operators.size()); ++k) {
    Matrix post = kraus.operators[k] * rho.matrix() *
                  kraus.operators[k].adjoint();
    const double p = post.trace().real();
    if (p < kZeroBranchTol) continue;
    post /= p;
    out.push_back(MeasureBranch{k, p, DensityMatrix(std::move(post))});
  }
  return out;
}

namespace {

// Kept bit positions in master order (most significant first) for a keep set.
std::vector<int> kept_bits(const KeepSet& keep) {
  std::vector<int> bits;
  if (keep.pol) {
    bits.push_back(static_cast<int>(Coord::kPolA));
    bits.push_back(static_cast<int>(Coord::kPolB));
  }
  if (keep.freq) {
    bits.push_back(static_cast<int>(Coord::kFreqA));
    bits.push_back(static_cast<int>(Coord::kFreqB));
  }
  if (keep.rail) {
    bits.push_back(static_cast<int>(Coord::kRailA));
    bits.push_back(static_cast<int>(Coord::kRailB));
  }
  return bits;
}

}  // namespace

Matrix partial_trace(const DensityMatrix& rho, const KeepSet& keep) {
  if (keep.count() == 0) {
    throw std::invalid_argument("partial_trace requires a nonempty keep set");
  }
  const std::vector<int> bits = kept_bits(keep);
  const int kept_n = static_cast<int>(bits.size());
  const int traced_mask = [&] {
    int m = kDim - 1;
    for (int b : bits) m &= ~(1 << b);
    return m;
  }();

  auto reduced_index = [&](int i) {
    int r = 0;
    for (int b : bits) r = (r << 1) | ((i >> b) & 1);
    return r;
  };

  const int dim = 1 << kept_n;
  Matrix out = Matrix::Zero(dim, dim);
  const Matrix& m = rho.matrix();
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      if ((i & traced_mask) != (j & traced_mask)) continue;
      out(reduced_index(i), reduced_index(j)) += m(i, j);
    }
  }
  return out;
}

double fidelity(const Matrix& rho, const Vector& target) {
  if (rho.rows() != rho.cols() || rho.rows() != target.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  if (std::abs(target.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("fidelity: target is not normalized");
  }
  return (target.adjoint() * rho * target)(0, 0).real();
}

double fidelity(const DensityMatrix& rho, const Vector& target) {
  return fidelity(rho.matrix(), target);
}

}  // namespace hyperepp
