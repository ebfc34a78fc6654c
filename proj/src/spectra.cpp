#include "antilin/spectra.hpp"

#include "antilin/takagi.hpp"

#include <algorithm>
#include <cmath>

namespace antilin {

double spectral_distance(const RealLinearOp& op, Complex lambda) {
  const RealLinearOp shifted = op - RealLinearOp::scalar(op.dim(), lambda);
  const RealVector s = singular_values_of(realify(shifted));
  return s(s.size() - 1);
}

bool in_spectrum(const RealLinearOp& op, const SpectrumQuery& q) {
  if (!(q.tol > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "in_spectrum: tol must be > 0");
  }
  return spectral_distance(op, q.lambda) <
         q.tol * std::max(1.0, operator_norm(op));
}

bool circular_symmetry_check(const RealLinearOp& op, Complex lambda,
                             std::span<const double> phases, double tol) {
  if (!op.is_antilinear()) {
    throw Error(ErrorCode::not_antilinear,
                "circular_symmetry_check: operator has a linear part",
                op.linear().norm());
  }
  return std::all_of(phases.begin(), phases.end(), [&](double theta) {
    return in_spectrum(op, {std::polar(1.0, theta) * lambda, tol});
  });
}

Matrix conjugation_eigenbasis(const Conjugation& kappa) {
  return takagi(kappa.matrix()).u;
}

Vector eigvec_for_phase(const Conjugation& kappa, double theta) {
  const Matrix basis = conjugation_eigenbasis(kappa);
  return std::polar(1.0, -0.5 * theta) * basis.col(0);
}

Matrix conjugation_transfer(const Conjugation& tau, const Conjugation& kappa) {
  require_same_dim(tau.dim(), kappa.dim(), "conjugation_transfer");
  const Matrix e = conjugation_eigenbasis(tau);
  const Matrix f = conjugation_eigenbasis(kappa);
  return f * e.adjoint();
}

}  // namespace antilin
