#include "antilin/types.hpp"

#include <algorithm>
#include <cmath>

namespace antilin {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::missing_probe: return "missing_probe";
    case ErrorCode::not_square: return "not_square";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::not_unitary: return "not_unitary";
    case ErrorCode::not_involution: return "not_involution";
    case ErrorCode::not_orthonormal: return "not_orthonormal";
    case ErrorCode::not_antilinear: return "not_antilinear";
    case ErrorCode::not_psd: return "not_psd";
    case ErrorCode::not_normal: return "not_normal";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::commutation_violated: return "commutation_violated";
    case ErrorCode::not_tau_fixed: return "not_tau_fixed";
    case ErrorCode::not_tau_symmetric: return "not_tau_symmetric";
    case ErrorCode::zero_vector: return "zero_vector";
    case ErrorCode::partition_cap: return "partition_cap";
    case ErrorCode::invalid_parameter: return "invalid_parameter";
    case ErrorCode::invalid_index: return "invalid_index";
    case ErrorCode::convergence_failure: return "convergence_failure";
    case ErrorCode::residual_failure: return "residual_failure";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what, double residual)
    : std::runtime_error(what), code_(code), residual_(residual) {}

void ToleranceConfig::validate() const {
  auto ok = [](double t) { return t > 0.0 && t <= 1e-2; };
  if (!ok(validation_tol) || !ok(cluster_tol)) {
    throw Error(ErrorCode::invalid_parameter,
                "tolerances must lie in (0, 1e-2]");
  }
}

double frobenius(const Matrix& m) { return m.norm(); }

namespace {

// Singular values from the symmetric eigenproblem of the dilation
// [[0, X], [X^*, 0]], whose eigenvalues are +-s_i padded with zeros. Absolute
// accuracy is eps * ||X|| regardless of how the s_i cluster.
template <typename Mat>
RealVector dilation_singular_values(const Mat& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  const Eigen::Index k = std::min(r, c);
  if (k == 0) return RealVector(0);
  Mat h = Mat::Zero(r + c, r + c);
  h.topRightCorner(r, c) = m;
  h.bottomLeftCorner(c, r) = m.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::convergence_failure,
                "singular values: eigensolver did not converge");
  }
  const RealVector& ev = es.eigenvalues();  // ascending
  RealVector s(k);
  for (Eigen::Index i = 0; i < k; ++i) s(i) = std::max(0.0, ev(r + c - 1 - i));
  return s;
}

}  // namespace

RealVector singular_values_of(const Matrix& m) { return dilation_singular_values(m); }

RealVector singular_values_of(const RealMatrix& m) { return dilation_singular_values(m); }

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values_of(m)(0);
}

double spectral_norm(const RealMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values_of(m)(0);
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

void require_square(const Matrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(ErrorCode::not_square,
                std::string(what) + ": matrix must be square and non-empty");
  }
  if (!all_finite(m)) {
    throw Error(ErrorCode::non_finite,
                std::string(what) + ": matrix has non-finite entries");
  }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, std::string_view what) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": dimension mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

Matrix orthonormal_complement(const Matrix& cols) {
  const Eigen::Index n = cols.rows();
  const Eigen::Index k = cols.cols();
  if (k == 0) return Matrix::Identity(n, n);
  if (k >= n) return Matrix(n, 0);
  Eigen::HouseholderQR<Matrix> qr(cols);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - k);
}

}  // namespace antilin
