#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace antilin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Machine-readable failure categories. The CLI reports these verbatim.
enum class ErrorCode {
  dimension_mismatch,
  missing_probe,
  not_square,
  non_finite,
  not_symmetric,
  not_unitary,
  not_involution,
  not_orthonormal,
  not_antilinear,
  not_psd,
  not_normal,
  not_hermitian,
  commutation_violated,
  not_tau_fixed,
  not_tau_symmetric,
  zero_vector,
  partition_cap,
  invalid_parameter,
  invalid_index,
  convergence_failure,
  residual_failure,
};

std::string_view to_string(ErrorCode code);

/// Raised when a mathematical precondition or invariant fails. `residual`
/// carries the offending measurement (0 when there is none).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double residual = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorCode code_;
  double residual_;
};

struct ToleranceConfig {
  double validation_tol = 1e-8;
  double cluster_tol = 1e-8;

  /// Throws invalid_parameter unless both values lie in (0, 1e-2].
  void validate() const;
};

// Norm helpers. Constructors validate with Frobenius residuals; spectral
// norms are used wherever a contract talks about operator norms.
double frobenius(const Matrix& m);
/// Singular values, descending, min(rows, cols) of them.
RealVector singular_values_of(const Matrix& m);
RealVector singular_values_of(const RealMatrix& m);

double spectral_norm(const Matrix& m);
double spectral_norm(const RealMatrix& m);

bool all_finite(const Matrix& m);
void require_square(const Matrix& m, std::string_view what);
void require_same_dim(Eigen::Index a, Eigen::Index b, std::string_view what);

/// Orthonormal basis (columns) of the orthogonal complement of the column
/// span of `cols`, which must have orthonormal columns.
Matrix orthonormal_complement(const Matrix& cols);

}  // namespace antilin
