#pragma once

#include "antilin/core.hpp"

#include <span>

namespace antilin {

struct SpectrumQuery {
  Complex lambda;
  double tol = 1e-8;
};

/// lambda is in the spectrum iff the smallest singular value of
/// realify(op - lambda) is below tol * max(1, ||op||). In finite dimension
/// this is the whole spectrum and coincides with the point spectrum.
bool in_spectrum(const RealLinearOp& op, const SpectrumQuery& q);

/// Smallest singular value of realify(op - lambda).
double spectral_distance(const RealLinearOp& op, Complex lambda);

/// True iff every e^{i theta} lambda is in the spectrum of the antilinear
/// operator `op`. Throws not_antilinear when op has a linear part.
bool circular_symmetry_check(const RealLinearOp& op, Complex lambda,
                             std::span<const double> phases, double tol);

/// Orthonormal basis (columns) of vectors fixed by kappa. Computed from the
/// Takagi factorization T = U U^T, whose columns satisfy T conj(u) = u.
Matrix conjugation_eigenbasis(const Conjugation& kappa);

/// Unit vector v with kappa v = e^{i theta} v.
Vector eigvec_for_phase(const Conjugation& kappa, double theta);

/// Unitary U with T_tau = U^* T_kappa conj(U), i.e. tau = U^* kappa U as maps.
/// U sends the fixed basis of tau to the fixed basis of kappa.
Matrix conjugation_transfer(const Conjugation& tau, const Conjugation& kappa);

}  // namespace antilin
