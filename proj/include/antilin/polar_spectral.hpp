#pragma once

#include "antilin/core.hpp"
#include "antilin/takagi.hpp"

#include <set>
#include <vector>

namespace antilin {

/// Positive square root of a Hermitian PSD matrix. Eigenvalues down to
/// -tol * ||H|| are treated as rounding noise and clamped to zero; anything
/// more negative throws not_psd.
Matrix sqrt_psd(const Matrix& h, double tol = 1e-8);

/// A = |A| tau = tau |A| for a self-adjoint antilinear A.
struct PolarForm {
  Matrix modulus;  // |A|, Hermitian PSD
  Conjugation tau;
  /// Takagi factorization the form was built from; its columns are fixed by
  /// tau and diagonalize |A|.
  TakagiFactorization takagi;
};

/// Through M = U diag(d) U^T: |A| = U diag(d) U^* and T = U U^T. On ker(A)
/// the conjugation fixes the kernel columns of U.
PolarForm polar(const RealLinearOp& a, double tol = 1e-8);

struct SpectralAtom {
  double lambda;
  Matrix projection;  // E_i
};

/// Atomic antilinear spectral measure F(S) = E(S) tau over subsets S of atom
/// indices.
class SpectralMeasure {
 public:
  /// Validates completeness, orthogonality, idempotence, commutation with
  /// tau and strict descent of lambda against `tol`.
  SpectralMeasure(std::vector<SpectralAtom> atoms, Conjugation tau,
                  double tol = 1e-8);

  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  const Conjugation& tau() const { return tau_; }
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<SpectralAtom> atoms_;
  Conjugation tau_;
};

/// Atoms are clusters of the eigenvalues of |A| (single linkage with gap
/// cluster_tol * ||A||); each lambda is its cluster mean.
SpectralMeasure spectral_measure(const RealLinearOp& a,
                                 const ToleranceConfig& tol = {});

/// F(S) as an antilinear projection with matrix E_S T.
AntilinearProjection measure_of(const SpectralMeasure& measure,
                                const std::set<std::size_t>& index_set);

/// (0, sum_i lambda_i E_i T).
RealLinearOp reconstruct(const SpectralMeasure& measure);

}  // namespace antilin
