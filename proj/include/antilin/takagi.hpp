#pragma once

#include "antilin/core.hpp"

#include <vector>

namespace antilin {

/// M = U diag(d) U^T with U unitary and d descending and nonnegative.
struct TakagiFactorization {
  Matrix u;
  RealVector d;

  Matrix reconstruct() const;
};

/// Takagi factorization of a complex symmetric matrix.
///
/// The columns of U are the eigenvectors of the real symmetric 2n x 2n
/// matrix realify((0, M)) belonging to its n largest eigenvalues: an
/// eigenvector [x; y] with eigenvalue s >= 0 is a vector u = x + i y with
/// M conj(u) = s u. Vectors for (numerically) zero values are replaced by an
/// orthonormal completion, and the surviving columns are re-orthonormalized
/// in descending order of d so that U is unitary to working precision.
///
/// Throws not_symmetric when ||M - M^T||_F > tol ||M||_F and
/// convergence_failure if the eigensolver does not converge.
TakagiFactorization takagi(const Matrix& m, double tol = 1e-8);

/// Orthonormal u_j and nonnegative d_j with A u_j = d_j u_j.
struct AntilinearEigensystem {
  Matrix basis;  // columns u_j
  RealVector values;
};

/// Unitary diagonalization of a self-adjoint antilinear operator.
AntilinearEigensystem antilinear_eig(const RealLinearOp& a, double tol = 1e-8);

/// Moves the phases of a complex diagonal into the basis: if A e_n = d_n e_n
/// with d_n = |d_n| e^{i theta_n}, then A (e^{i theta_n / 2} e_n) =
/// |d_n| (e^{i theta_n / 2} e_n) for antilinear A.
AntilinearEigensystem absorb_phases(const Matrix& basis,
                                    const Eigen::VectorXcd& values);

struct CommonEigenvector {
  Vector z;
  Complex lambda;  // N z = lambda z
  double r;        // S z = r z
  /// Dimension of ker(N - lambda) the vector was drawn from.
  Eigen::Index eigenspace_dim;
  /// || (I - P_W) S w || over an orthonormal basis of W.
  double invariance_residual;
};

/// Common eigenvector of a normal N and a self-adjoint antilinear S with
/// N S = S N^*, i.e. N M_S = M_S N^T.
///
/// The eigenvalue of N is the one with the largest eigenspace; ties go to the
/// smallest modulus and then the smallest argument. Eigenvalues of N are
/// grouped when they differ by at most cluster_tol * max(1, ||N||).
CommonEigenvector common_eigenvector(const Matrix& n_op, const RealLinearOp& s,
                                     const ToleranceConfig& tol = {});

struct CommutingPairDiagonalization {
  Matrix basis;                 // columns e_k
  std::vector<Complex> lambdas; // N e_k = lambda_k e_k
  std::vector<double> rs;       // S e_k = r_k e_k
};

/// Diagonalizes A = N + S by repeated deflation: take a common eigenvector,
/// split off its span and recurse on the orthogonal complement.
CommutingPairDiagonalization diagonalize_commuting_pair(
    const Matrix& n_op, const RealLinearOp& s, const ToleranceConfig& tol = {});

}  // namespace antilin
