#pragma once

#include "antilin/core.hpp"
#include "antilin/schatten.hpp"

#include <string>
#include <vector>

namespace antilin {

struct WvnOptions {
  /// Largest admissible partition count m. Counts are carried as doubles:
  /// late induction steps have tiny budgets and need astronomically fine
  /// partitions, which only ever separate the eigenvalues of |A| further.
  double max_partitions = 1e30;
  /// e_j whose projection onto the uncovered subspace is at most this long
  /// are skipped.
  double cover_tol = 1e-8;
  /// g_k = 0 when ||f_k|| <= vanish_tol * ||f||.
  double vanish_tol = 1e-12;
  /// Validation tolerance for symmetry and tau-fixedness checks.
  double tol = 1e-8;
};

/// Smallest integer m >= 1 with 2 width / m^{1/q} < bound. Throws
/// partition_cap when it exceeds `cap`.
double partition_count(double width, double bound, double q, double cap);

/// One reduction: A = B - K with B reduced by the finite-rank projection P.
struct ReduceStepResult {
  Matrix p_proj;
  RealLinearOp k_op;
  RealLinearOp b_op;
  double achieved_norm;  // ||K||_p

  double partitions;        // m
  double width;             // b - a with a = 0, b = ||A||
  double off_diagonal_norm; // ||P_perp A P||
  Eigen::Index rank;        // rank P
  Matrix g;                 // the nonzero g_k as columns, ascending k
};

/// Splits the spectrum [0, ||A||] of |A| into m equal subintervals, projects
/// the tau-fixed vector f onto each spectral subspace, and lets P project onto
/// the span of the normalized pieces. K = -(P_perp A P + P A P_perp).
ReduceStepResult reduce_step(const RealLinearOp& a, const Vector& f,
                             double bound, const SchattenParams& params,
                             const WvnOptions& options = {});

struct WvnBlock {
  Matrix projection;   // P_j
  Matrix basis;        // orthonormal columns spanning range(P_j)
  RealVector values;   // D basis_i = values_i basis_i
};

/// Ledger entry for one induction step.
struct WvnStep {
  int index;                  // j, budget is epsilon / 2^j
  Eigen::Index basis_index;   // which tau-fixed e_j seeded the step
  std::string fixed_part;     // "real" or "imag": which tau_r-fixed part of
                              // the projected e_j was used as f
  double budget;
  double partitions;
  double width;
  double off_diagonal_norm;
  Eigen::Index rank;
  Eigen::Index remaining_dim;  // dimension of the subspace before the step
  double k_norm;               // ||K_j||_p
};

/// A = D + K with D diagonalizable self-adjoint antilinear and ||K||_p < eps.
struct WvnDecomposition {
  RealLinearOp d_op;
  RealLinearOp k_op;  // A - D
  std::vector<WvnBlock> blocks;
  std::vector<WvnStep> steps;
  double p;
  double epsilon;
  double achieved_norm;

  /// Union of the block bases, in block order.
  Matrix eigenbasis() const;
  RealVector eigenvalues() const;
};

/// Inductive reduction over the tau-fixed basis from polar(A): step j reduces
/// the operator restricted to the still uncovered subspace with budget
/// eps / 2^j, then every block is diagonalized with Takagi.
WvnDecomposition wvn_decompose(const RealLinearOp& a, double epsilon,
                               const SchattenParams& params,
                               const WvnOptions& options = {});

}  // namespace antilin
