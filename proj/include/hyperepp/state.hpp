#pragma once
// Exact finite-dimensional state algebra for the 64-dimensional two-photon
// space: construction, unitary evolution, generalized measurement, reduction
// and fidelity. All values are immutable after construction and every
// operation is a pure function.

#include <string>
#include <vector>

#include "hyperepp/basis.hpp"
#include "hyperepp/errors.hpp"
#include "hyperepp/linalg.hpp"

namespace hyperepp {

// 64x64 complex Hermitian trace-one matrix over the joint
// (pol_A, pol_B, freq_A, freq_B, rail_A, rail_B) basis.
class DensityMatrix {
 public:
  // The maximally mixed state; keeps default-constructed report entries
  // valid.
  DensityMatrix();

  // Validates dimension, Hermiticity (entrywise 1e-12) and unit trace
  // (1e-12). Positivity is not recomputed on every construction; callers that
  // need it use is_positive_semidefinite().
  explicit DensityMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }

  double trace_distance_from_hermitian() const {
    return max_abs(m_ - m_.adjoint());
  }
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = kPsdTol) const {
    return min_eigenvalue() >= -tol;
  }
  double purity() const { return (m_ * m_).trace().real(); }

 private:
  Matrix m_;
};

struct KrausSet {
  std::vector<Matrix> operators;

  // sum K^dag K == I entrywise within tol.
  bool is_complete(double tol = kKrausTol) const;
};

struct MeasureBranch {
  int outcome = 0;  // index into the Kraus operator list
  double probability = 0.0;
  DensityMatrix state;
};

// rho = |psi><psi| from a 64-component amplitude vector. A non-normalized
// nonzero vector is normalized; the zero vector is rejected.
DensityMatrix make_pure(const Vector& amplitudes);

// U rho U^dag. U must be unitary to 1e-12 or a ContractViolationError is
// thrown; trace and spectrum are preserved.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u);

// Generalized measurement. Branch probabilities are Tr(K rho K^dag) and sum
// to one; post-states are renormalized; zero-probability branches are
// omitted. Incomplete Kraus sets are rejected.
std::vector<MeasureBranch> measure(const DensityMatrix& rho,
                                   const KrausSet& kraus);

// Which coordinate pairs survive a partial trace. Each flag keeps both
// parties' bits of that degree of freedom, in the master bit order.
struct KeepSet {
  bool pol = false;
  bool freq = false;
  bool rail = false;

  int count() const { return int(pol) + int(freq) + int(rail); }
};

// Reduced density matrix over the kept coordinates (dimension 4^count).
// An empty keep set is rejected.
Matrix partial_trace(const DensityMatrix& rho, const KeepSet& keep);

// <target| rho |target>. Works for any square rho whose dimension matches the
// target vector; the target must be normalized.
double fidelity(const Matrix& rho, const Vector& target);
double fidelity(const DensityMatrix& rho, const Vector& target);

// State dump format: {"basis": "v1", "re": [[...]], "im": [[...]]} using the
// fixed index convention. The reader rejects wrong-size matrices and unknown
// basis tags. (Serialized via report_io.hpp.)

}  // namespace hyperepp
