#include "antilin/core.hpp"

#include <algorithm>
#include <cmath>

namespace antilin {

namespace {

const Complex I_UNIT{0.0, 1.0};

}  // namespace

// ---------------------------------------------------------------------------
// RealLinearOp

RealLinearOp::RealLinearOp(Matrix linear, Matrix antilinear)
    : linear_(std::move(linear)), antilinear_(std::move(antilinear)) {
  require_square(linear_, "RealLinearOp linear part");
  require_square(antilinear_, "RealLinearOp antilinear part");
  require_same_dim(linear_.rows(), antilinear_.rows(), "RealLinearOp");
}

RealLinearOp RealLinearOp::identity(Eigen::Index n) {
  return {Matrix::Identity(n, n), Matrix::Zero(n, n)};
}

RealLinearOp RealLinearOp::zero(Eigen::Index n) {
  return {Matrix::Zero(n, n), Matrix::Zero(n, n)};
}

RealLinearOp RealLinearOp::complex_linear(Matrix c) {
  const auto n = c.rows();
  return {std::move(c), Matrix::Zero(n, n)};
}

RealLinearOp RealLinearOp::antilinear_op(Matrix m) {
  const auto n = m.rows();
  return {Matrix::Zero(n, n), std::move(m)};
}

RealLinearOp RealLinearOp::scalar(Eigen::Index n, Complex lambda) {
  return {lambda * Matrix::Identity(n, n), Matrix::Zero(n, n)};
}

bool RealLinearOp::is_antilinear(double tol) const {
  return linear_.norm() <= tol;
}

bool RealLinearOp::is_complex_linear(double tol) const {
  return antilinear_.norm() <= tol;
}

bool RealLinearOp::is_selfadjoint_antilinear(double rel_tol) const {
  const double scale = std::max(1.0, antilinear_.norm());
  return linear_.norm() <= rel_tol * scale &&
         (antilinear_ - antilinear_.transpose()).norm() <= rel_tol * scale;
}

RealLinearOp RealLinearOp::operator+(const RealLinearOp& o) const {
  require_same_dim(dim(), o.dim(), "operator+");
  return {linear_ + o.linear_, antilinear_ + o.antilinear_};
}

RealLinearOp RealLinearOp::operator-(const RealLinearOp& o) const {
  require_same_dim(dim(), o.dim(), "operator-");
  return {linear_ - o.linear_, antilinear_ - o.antilinear_};
}

RealLinearOp RealLinearOp::operator*(double s) const {
  return {s * linear_, s * antilinear_};
}

// ---------------------------------------------------------------------------
// Conjugation

ConjugationResiduals conjugation_residuals(const Matrix& t) {
  const auto n = t.rows();
  const Matrix id = Matrix::Identity(n, n);
  return {(t - t.transpose()).norm() / std::max(1e-300, t.norm()),
          (t * t.adjoint() - id).norm(), (t * t.conjugate() - id).norm()};
}

Conjugation::Conjugation(Matrix t, double tol) : t_(std::move(t)) {
  require_square(t_, "Conjugation");
  const auto r = conjugation_residuals(t_);
  if (r.symmetry > tol) {
    throw Error(ErrorCode::not_symmetric, "conjugation matrix not symmetric",
                r.symmetry);
  }
  if (r.unitarity > tol) {
    throw Error(ErrorCode::not_unitary, "conjugation matrix not unitary",
                r.unitarity);
  }
  if (r.involution > tol) {
    throw Error(ErrorCode::not_involution, "conjugation is not an involution",
                r.involution);
  }
}

Conjugation Conjugation::standard(Eigen::Index n) {
  return Conjugation(Matrix::Identity(n, n));
}

Conjugation Conjugation::from_basis(const Matrix& basis, double tol) {
  require_square(basis, "Conjugation::from_basis");
  return Conjugation(basis * basis.transpose(), tol);
}

Vector Conjugation::apply(const Vector& x) const {
  require_same_dim(dim(), x.size(), "Conjugation::apply");
  return t_ * x.conjugate();
}

// ---------------------------------------------------------------------------
// AntilinearProjection

ProjectionResiduals projection_residuals(const Matrix& m, const Matrix& p) {
  const auto n = m.rows();
  const Matrix id = Matrix::Identity(n, n);
  return {(m * m.conjugate() - p).norm(), (m - m.transpose()).norm(),
          (m * (id - p).conjugate()).norm(),
          (p * p - p).norm() + (p - p.adjoint()).norm()};
}

AntilinearProjection::AntilinearProjection(Matrix m, Matrix range_projection,
                                           double tol)
    : m_(std::move(m)), p_(std::move(range_projection)) {
  require_square(m_, "AntilinearProjection");
  require_square(p_, "AntilinearProjection range");
  require_same_dim(m_.rows(), p_.rows(), "AntilinearProjection");
  const auto r = projection_residuals(m_, p_);
  const double scale = std::max(1.0, p_.norm());
  if (r.idempotence > tol * scale) {
    throw Error(ErrorCode::not_hermitian,
                "range projection is not a Hermitian idempotent",
                r.idempotence);
  }
  if (r.symmetry > tol * scale) {
    throw Error(ErrorCode::not_symmetric,
                "antilinear projection not self-adjoint", r.symmetry);
  }
  if (r.square > tol * scale) {
    throw Error(ErrorCode::not_involution,
                "antilinear projection does not square to its range",
                r.square);
  }
  if (r.complement > tol * scale) {
    throw Error(ErrorCode::residual_failure,
                "antilinear projection nonzero on range complement",
                r.complement);
  }
}

// ---------------------------------------------------------------------------
// Operations

RealLinearOp from_action(Eigen::Index n, const ActionSamples& samples) {
  if (n < 1) throw Error(ErrorCode::invalid_parameter, "dimension must be >= 1");
  Matrix c(n, n), m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto re = samples.find({j, false});
    auto im = samples.find({j, true});
    if (re == samples.end() || im == samples.end()) {
      throw Error(ErrorCode::missing_probe,
                  "missing probe for basis index " + std::to_string(j));
    }
    require_same_dim(n, re->second.size(), "from_action sample");
    require_same_dim(n, im->second.size(), "from_action sample");
    c.col(j) = 0.5 * (re->second - I_UNIT * im->second);
    m.col(j) = 0.5 * (re->second + I_UNIT * im->second);
  }
  return {std::move(c), std::move(m)};
}

RealLinearOp from_action(Eigen::Index n,
                         const std::function<Vector(const Vector&)>& action) {
  ActionSamples samples;
  for (Eigen::Index j = 0; j < n; ++j) {
    Vector e = Vector::Zero(n);
    e(j) = 1.0;
    samples[{j, false}] = action(e);
    samples[{j, true}] = action(I_UNIT * e);
  }
  return from_action(n, samples);
}

Vector apply(const RealLinearOp& op, const Vector& x) {
  require_same_dim(op.dim(), x.size(), "apply");
  return op.linear() * x + op.antilinear() * x.conjugate();
}

RealLinearOp compose(const RealLinearOp& a, const RealLinearOp& b) {
  require_same_dim(a.dim(), b.dim(), "compose");
  return {a.linear() * b.linear() + a.antilinear() * b.antilinear().conjugate(),
          a.linear() * b.antilinear() + a.antilinear() * b.linear().conjugate()};
}

RealLinearOp adjoint(const RealLinearOp& op) {
  return {op.linear().adjoint(), op.antilinear().transpose()};
}

RealMatrix realify(const RealLinearOp& op) {
  const auto n = op.dim();
  const RealMatrix cr = op.linear().real(), ci = op.linear().imag();
  const RealMatrix mr = op.antilinear().real(), mi = op.antilinear().imag();
  RealMatrix r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = cr + mr;
  r.topRightCorner(n, n) = -ci + mi;
  r.bottomLeftCorner(n, n) = ci + mi;
  r.bottomRightCorner(n, n) = cr - mr;
  return r;
}

RealVector stack(const Vector& x) {
  RealVector v(2 * x.size());
  v.head(x.size()) = x.real();
  v.tail(x.size()) = x.imag();
  return v;
}

Vector unstack(const RealVector& v) {
  const auto n = v.size() / 2;
  Vector x(n);
  x.real() = v.head(n);
  x.imag() = v.tail(n);
  return x;
}

double operator_norm(const RealLinearOp& op) {
  return spectral_norm(realify(op));
}

AntilinearProjection antilinear_projection(const Matrix& frame, double tol) {
  const auto k = frame.cols();
  const Matrix gram = frame.adjoint() * frame;
  const double err = (gram - Matrix::Identity(k, k)).norm();
  if (err > tol) {
    throw Error(ErrorCode::not_orthonormal, "frame is not orthonormal", err);
  }
  return AntilinearProjection(frame * frame.transpose(),
                              frame * frame.adjoint(), tol);
}

}  // namespace antilin
