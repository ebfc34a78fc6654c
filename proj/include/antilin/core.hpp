#pragma once

#include "antilin/types.hpp"

#include <map>
#include <functional>

namespace antilin {

// Conventions used throughout the library:
//   * the inner product <x, y> = sum_i x_i conj(y_i) is linear in the first
//     argument;
//   * an antilinear map is stored as the matrix M of x -> M conj(x), so its
//     adjoint has matrix M^T and self-adjointness means M = M^T.

/// A real-linear operator x -> C x + M conj(x) on C^n.
class RealLinearOp {
 public:
  RealLinearOp(Matrix linear, Matrix antilinear);

  static RealLinearOp identity(Eigen::Index n);
  static RealLinearOp zero(Eigen::Index n);
  static RealLinearOp complex_linear(Matrix c);
  static RealLinearOp antilinear_op(Matrix m);
  /// Multiplication by the complex scalar lambda, which is complex linear.
  static RealLinearOp scalar(Eigen::Index n, Complex lambda);

  Eigen::Index dim() const { return linear_.rows(); }
  const Matrix& linear() const { return linear_; }
  const Matrix& antilinear() const { return antilinear_; }

  /// True when the complex-linear part vanishes (Frobenius norm <= tol).
  bool is_antilinear(double tol = 0.0) const;
  bool is_complex_linear(double tol = 0.0) const;
  /// Self-adjoint antilinear: zero linear part and symmetric M.
  bool is_selfadjoint_antilinear(double rel_tol) const;

  RealLinearOp operator+(const RealLinearOp& o) const;
  RealLinearOp operator-(const RealLinearOp& o) const;
  /// Real scalars only; complex scalars are not central in this algebra.
  RealLinearOp operator*(double s) const;

  bool operator==(const RealLinearOp& o) const {
    return linear_ == o.linear_ && antilinear_ == o.antilinear_;
  }

 private:
  Matrix linear_;
  Matrix antilinear_;
};

/// A unitary conjugation x -> T conj(x): T symmetric and unitary, hence an
/// involution.
class Conjugation {
 public:
  /// Validates symmetry, unitarity and the involution property against
  /// `tol` (Frobenius residuals). Throws Error on violation.
  explicit Conjugation(Matrix t, double tol = 1e-8);

  static Conjugation standard(Eigen::Index n);
  /// The conjugation fixing every column of the unitary `basis`: T = F F^T.
  static Conjugation from_basis(const Matrix& basis, double tol = 1e-8);

  Eigen::Index dim() const { return t_.rows(); }
  const Matrix& matrix() const { return t_; }
  RealLinearOp as_op() const { return RealLinearOp::antilinear_op(t_); }
  Vector apply(const Vector& x) const;

 private:
  Matrix t_;
};

/// Residuals of the three conjugation invariants.
struct ConjugationResiduals {
  double symmetry;
  double unitarity;
  double involution;
};
ConjugationResiduals conjugation_residuals(const Matrix& t);

/// An antilinear map that is a unitary conjugation on the range of
/// `range_projection` and zero on its orthogonal complement.
class AntilinearProjection {
 public:
  AntilinearProjection(Matrix m, Matrix range_projection, double tol = 1e-8);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Matrix& range_projection() const { return p_; }
  RealLinearOp as_op() const { return RealLinearOp::antilinear_op(m_); }

 private:
  Matrix m_;
  Matrix p_;
};

struct ProjectionResiduals {
  double square;       // || M conj(M) - P ||
  double symmetry;     // || M - M^T ||
  double complement;   // || M conj(I - P) ||
  double idempotence;  // || P^2 - P || + || P - P^* ||
};
ProjectionResiduals projection_residuals(const Matrix& m, const Matrix& p);

/// Probe vector identifier: e_j (imaginary = false) or i e_j.
struct Probe {
  Eigen::Index index;
  bool imaginary;
  auto operator<=>(const Probe&) const = default;
};
using ActionSamples = std::map<Probe, Vector>;

/// Recovers (C, M) from the images of e_j and i e_j.
RealLinearOp from_action(Eigen::Index n, const ActionSamples& samples);
/// Probes a black-box real-linear map.
RealLinearOp from_action(Eigen::Index n,
                         const std::function<Vector(const Vector&)>& action);

Vector apply(const RealLinearOp& op, const Vector& x);
RealLinearOp compose(const RealLinearOp& a, const RealLinearOp& b);
RealLinearOp adjoint(const RealLinearOp& op);

/// 2n x 2n real matrix acting on stacked [Re x; Im x].
RealMatrix realify(const RealLinearOp& op);
/// Inverse of the stacking used by realify.
RealVector stack(const Vector& x);
Vector unstack(const RealVector& v);

double operator_norm(const RealLinearOp& op);

/// F x = sum_k <f_k, x> f_k for an orthonormal frame given as columns.
AntilinearProjection antilinear_projection(const Matrix& frame,
                                           double tol = 1e-8);

}  // namespace antilin
