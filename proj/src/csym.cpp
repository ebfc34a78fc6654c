#include "antilin/csym.hpp"

#include "antilin/spectra.hpp"

#include <algorithm>

namespace antilin {

double tau_symmetry_residual(const Matrix& s, const Conjugation& tau) {
  require_square(s, "tau_symmetry_residual");
  require_same_dim(s.rows(), tau.dim(), "tau_symmetry_residual");
  const RealLinearOp t = tau.as_op();
  const RealLinearOp composite =
      compose(t, compose(RealLinearOp::complex_linear(s.adjoint()), t));
  return (composite.linear() - s).norm() + composite.antilinear().norm();
}

bool is_tau_symmetric(const Matrix& s, const Conjugation& tau, double tol) {
  return tau_symmetry_residual(s, tau) <= tol * std::max(1.0, s.norm());
}

TauSymmetricOp::TauSymmetricOp(Matrix s, Conjugation tau, double tol)
    : s_(std::move(s)), tau_(std::move(tau)) {
  const double r = tau_symmetry_residual(s_, tau_);
  if (r > tol * std::max(1.0, s_.norm())) {
    throw Error(ErrorCode::not_tau_symmetric,
                "operator is not tau-symmetric", r);
  }
}

RealLinearOp to_antilinear(const TauSymmetricOp& s) {
  return compose(RealLinearOp::complex_linear(s.matrix()), s.tau().as_op());
}

TauSymmetricOp to_csym(const RealLinearOp& a, const Conjugation& tau,
                       double tol) {
  require_same_dim(a.dim(), tau.dim(), "to_csym");
  if (!a.is_selfadjoint_antilinear(tol)) {
    throw Error(ErrorCode::not_symmetric,
                "to_csym: operator is not self-adjoint antilinear",
                (a.antilinear() - a.antilinear().transpose()).norm() +
                    a.linear().norm());
  }
  const RealLinearOp s = compose(a, tau.as_op());
  return TauSymmetricOp(s.linear(), tau, tol);
}

RealLinearOp tau_transpose(const Matrix& u, const Conjugation& tau) {
  const RealLinearOp t = tau.as_op();
  return compose(t, compose(RealLinearOp::complex_linear(u.adjoint()), t));
}

namespace {

RealLinearOp symmetric_part(const RealLinearOp& a) {
  const Matrix& m = a.antilinear();
  return RealLinearOp::antilinear_op(0.5 * (m + m.transpose()));
}

}  // namespace

CondiagApproximation approx_condiag(const TauSymmetricOp& s, double epsilon,
                                    const SchattenParams& params,
                                    const WvnOptions& options) {
  const RealLinearOp a = symmetric_part(to_antilinear(s));
  WvnDecomposition dec = wvn_decompose(a, epsilon, params, options);
  const Matrix f = dec.eigenbasis();
  const RealVector values = dec.eigenvalues();
  const Matrix e = conjugation_eigenbasis(s.tau());

  CondiagApproximation out{f * e.adjoint(),
                           e * values.cast<Complex>().asDiagonal() * e.adjoint(),
                           e,
                           0.0,
                           dec.achieved_norm,
                           std::move(dec)};
  const RealLinearOp approx =
      compose(RealLinearOp::complex_linear(out.u * out.d),
              tau_transpose(out.u, s.tau()));
  out.op_norm_error =
      operator_norm(RealLinearOp::complex_linear(s.matrix()) - approx);
  return out;
}

FactorApproximation approx_factor(const TauSymmetricOp& s, double epsilon,
                                  const SchattenParams& params,
                                  const WvnOptions& options) {
  const RealLinearOp tau_s = symmetric_part(
      compose(s.tau().as_op(), RealLinearOp::complex_linear(s.matrix())));
  WvnDecomposition dec = wvn_decompose(tau_s, epsilon, params, options);
  Matrix basis = dec.eigenbasis();
  const RealVector values = dec.eigenvalues();
  Conjugation kappa = Conjugation::from_basis(basis);
  Matrix d = basis * values.cast<Complex>().asDiagonal() * basis.adjoint();

  const RealLinearOp approx =
      compose(RealLinearOp::complex_linear(d), kappa.as_op());
  const double err = schatten_norm(tau_s - approx, params);
  return {std::move(kappa), std::move(d), std::move(basis), err,
          std::move(dec)};
}

RealLinearOp relative_state(const Matrix& coefficients, const Matrix& basis,
                            double tol) {
  require_square(coefficients, "relative_state");
  require_square(basis, "relative_state basis");
  require_same_dim(coefficients.rows(), basis.rows(), "relative_state");
  const Eigen::Index n = basis.rows();
  const double err = (basis.adjoint() * basis - Matrix::Identity(n, n)).norm();
  if (err > tol) {
    throw Error(ErrorCode::not_orthonormal,
                "relative_state: basis is not orthonormal", err);
  }
  // sigma = sum_j T e_j (x) e_j = sum_n v_n (x) f_n with v_n = T conj(f_n).
  const Matrix v = coefficients * basis.conjugate();
  // L f_n = M conj(f_n) = v_n for all n.
  return RealLinearOp::antilinear_op(v * basis.transpose());
}

}  // namespace antilin
