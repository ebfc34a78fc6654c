#include "antilin/schatten.hpp"

#include <cmath>
#include <limits>

namespace antilin {

SchattenParams::SchattenParams(double p) : p_(p), q_(0.0) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::invalid_parameter,
                "Schatten exponent must satisfy 1 < p < infinity");
  }
  q_ = p / (p - 1.0);
}

RealVector singular_values(const RealLinearOp& a) {
  if (!a.is_antilinear()) {
    throw Error(ErrorCode::not_antilinear,
                "singular_values: operator has a complex-linear part",
                a.linear().norm());
  }
  const Eigen::Index n = a.dim();
  const RealVector s2 = singular_values_of(realify(a));
  RealVector s(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    s(j) = 0.5 * (s2(2 * j) + s2(2 * j + 1));
  }
  return s;
}

double schatten_norm(const RealVector& s, const SchattenParams& params) {
  if (s.size() == 0) return 0.0;
  const double top = s.maxCoeff();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    sum += std::pow(s(j) / top, params.p());
  }
  return top * std::pow(sum, 1.0 / params.p());
}

double schatten_norm(const RealLinearOp& a, const SchattenParams& params) {
  return schatten_norm(singular_values(a), params);
}

double schatten_norm(const Matrix& c, const SchattenParams& params) {
  if (c.size() == 0) return 0.0;
  return schatten_norm(singular_values_of(c), params);
}

Eigen::Index numerical_rank(const RealVector& s) {
  if (s.size() == 0) return 0;
  const double cut = 1e-14 * s.maxCoeff();
  Eigen::Index r = 0;
  for (Eigen::Index j = 0; j < s.size(); ++j)
    if (s(j) > cut) ++r;
  return r;
}

}  // namespace antilin
