#pragma once

#include "antilin/core.hpp"

namespace antilin {

/// Exponent pair with 1/p + 1/q = 1 and 1 < p < infinity.
class SchattenParams {
 public:
  explicit SchattenParams(double p);

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  double p_;
  double q_;
};

/// Singular values of an antilinear operator, descending. These are the
/// eigenvalues of |A| = (A^* A)^{1/2} and are computed from realify(A), whose
/// singular values are those of A, each twice.
RealVector singular_values(const RealLinearOp& a);

/// (sum_n s_n^p)^{1/p}, evaluated with scaling by s_1.
double schatten_norm(const RealVector& singular_values, const SchattenParams& params);
double schatten_norm(const RealLinearOp& a, const SchattenParams& params);
/// Schatten norm of a complex-linear operator given by its matrix.
double schatten_norm(const Matrix& c, const SchattenParams& params);

/// Number of singular values above 1e-14 * s_1.
Eigen::Index numerical_rank(const RealVector& singular_values);

}  // namespace antilin
