#include "antilin/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace antilin {

double Rng::uniform() {
  const std::uint64_t x = engine_();
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

Matrix Sampler::ginibre(Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::invalid_parameter, "n must be >= 1");
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng_.complex_normal();
  return g;
}

Matrix Sampler::symmetric(Eigen::Index n) {
  const Matrix g = ginibre(n);
  return 0.5 * (g + g.transpose());
}

Matrix Sampler::unitary(Eigen::Index n) {
  const Matrix g = ginibre(n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

Conjugation Sampler::conjugation(Eigen::Index n) {
  const Matrix u = unitary(n);
  return Conjugation(u * u.transpose());
}

RealLinearOp Sampler::selfadjoint_antilinear(Eigen::Index n) {
  return RealLinearOp::antilinear_op(symmetric(n));
}

Vector Sampler::vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng_.complex_normal();
  return v;
}

Vector Sampler::unit_vector(Eigen::Index n) {
  Vector v = vector(n);
  return v / v.norm();
}

SampleKind parse_sample_kind(std::string_view name) {
  if (name == "ginibre") return SampleKind::ginibre;
  if (name == "symmetric") return SampleKind::symmetric;
  if (name == "unitary") return SampleKind::unitary;
  if (name == "conjugation") return SampleKind::conjugation;
  if (name == "selfadjoint_antilinear") return SampleKind::selfadjoint_antilinear;
  throw Error(ErrorCode::invalid_parameter,
              "unknown sample kind: " + std::string(name));
}

std::string_view to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::ginibre: return "ginibre";
    case SampleKind::symmetric: return "symmetric";
    case SampleKind::unitary: return "unitary";
    case SampleKind::conjugation: return "conjugation";
    case SampleKind::selfadjoint_antilinear: return "selfadjoint_antilinear";
  }
  return "unknown";
}

std::variant<RealLinearOp, Conjugation> sample(SampleKind kind,
                                               Eigen::Index n,
                                               std::uint64_t seed) {
  Sampler s(seed);
  switch (kind) {
    case SampleKind::ginibre: return RealLinearOp::complex_linear(s.ginibre(n));
    case SampleKind::symmetric:
      return RealLinearOp::complex_linear(s.symmetric(n));
    case SampleKind::unitary: return RealLinearOp::complex_linear(s.unitary(n));
    case SampleKind::conjugation: return s.conjugation(n);
    case SampleKind::selfadjoint_antilinear: return s.selfadjoint_antilinear(n);
  }
  throw Error(ErrorCode::invalid_parameter, "unknown sample kind");
}

}  // namespace antilin
