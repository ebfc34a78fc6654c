#pragma once

#include "antilin/core.hpp"
#include "antilin/schatten.hpp"
#include "antilin/wvn.hpp"

namespace antilin {

/// True iff tau S^* tau = S, evaluated as a composition of real-linear maps:
/// the composite must be complex linear with matrix S to tol * max(1, ||S||).
bool is_tau_symmetric(const Matrix& s, const Conjugation& tau, double tol = 1e-8);
/// || tau S^* tau - S ||_F as real-linear maps.
double tau_symmetry_residual(const Matrix& s, const Conjugation& tau);

/// A complex-linear S with tau S^* tau = S.
class TauSymmetricOp {
 public:
  TauSymmetricOp(Matrix s, Conjugation tau, double tol = 1e-8);

  const Matrix& matrix() const { return s_; }
  const Conjugation& tau() const { return tau_; }
  Eigen::Index dim() const { return s_.rows(); }

 private:
  Matrix s_;
  Conjugation tau_;
};

/// S -> S tau, a self-adjoint antilinear operator with matrix S T.
RealLinearOp to_antilinear(const TauSymmetricOp& s);
/// A -> A tau, which is tau-symmetric for any unitary conjugation tau.
TauSymmetricOp to_csym(const RealLinearOp& a, const Conjugation& tau,
                       double tol = 1e-8);

/// tau U^* tau as a real-linear composition; complex linear with matrix
/// T U^T conj(T), which is U^T for the standard conjugation.
RealLinearOp tau_transpose(const Matrix& u, const Conjugation& tau);

struct CondiagApproximation {
  Matrix u;                 // unitary, U e_n = f_n
  Matrix d;                 // nonnegative diagonal w.r.t. the tau-fixed e_n
  Matrix tau_basis;         // the e_n
  double op_norm_error;     // || S - U D tau U^* tau ||
  double schatten_error;    // || S tau - D~ ||_p from the decomposition
  WvnDecomposition decomposition;
};

/// S ~ U D tau U^* tau: decompose S tau = D~ + K and send the tau-fixed basis
/// to the basis diagonalizing D~.
CondiagApproximation approx_condiag(const TauSymmetricOp& s, double epsilon,
                                    const SchattenParams& params,
                                    const WvnOptions& options = {});

struct FactorApproximation {
  Conjugation kappa;        // conjugation w.r.t. `basis`
  Matrix d;                 // nonnegative diagonal w.r.t. `basis`
  Matrix basis;
  double schatten_error;    // || tau S - D kappa ||_p
  WvnDecomposition decomposition;
};

/// S ~ tau D kappa with kappa and D diagonal in the same basis: decompose the
/// self-adjoint antilinear tau S and factor its diagonal part as D kappa.
FactorApproximation approx_factor(const TauSymmetricOp& s, double epsilon,
                                  const SchattenParams& params,
                                  const WvnOptions& options = {});

/// The antilinear relative-state operator L with L f_n = v_n, where v_n are
/// the components of the bipartite state sum_ij T_ij a_i (x) b_j expanded in
/// the second-factor basis {f_n}. The result has matrix T for every basis.
RealLinearOp relative_state(const Matrix& coefficients, const Matrix& basis,
                            double tol = 1e-8);

}  // namespace antilin
