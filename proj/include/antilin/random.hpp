#pragma once

#include "antilin/core.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <variant>

namespace antilin {

/// Seeded source of standard complex Gaussians.
///
/// The stream is part of the reproducibility contract and is fully
/// specified here so it does not depend on the standard library vendor:
/// std::mt19937_64 seeded with `seed`; a uniform u in (0, 1) is
/// ((x >> 11) + 0.5) * 2^-53 for each raw draw x; normals come in pairs from
/// the Box-Muller transform r = sqrt(-2 ln u1), (r cos 2 pi u2, r sin 2 pi u2);
/// a standard complex Gaussian is (g1 + i g2) / sqrt(2) with E|z|^2 = 1.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Random operators of the kinds used throughout the tests and the CLI.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Matrix ginibre(Eigen::Index n);
  /// (G + G^T) / 2.
  Matrix symmetric(Eigen::Index n);
  /// Householder QR of a Ginibre matrix with the phases of diag(R) moved
  /// into Q, so the distribution is Haar.
  Matrix unitary(Eigen::Index n);
  Conjugation conjugation(Eigen::Index n);
  RealLinearOp selfadjoint_antilinear(Eigen::Index n);
  Vector vector(Eigen::Index n);
  Vector unit_vector(Eigen::Index n);
  double uniform() { return rng_.uniform(); }

 private:
  Rng rng_;
};

enum class SampleKind { ginibre, symmetric, unitary, conjugation,
                        selfadjoint_antilinear };

SampleKind parse_sample_kind(std::string_view name);
std::string_view to_string(SampleKind kind);

/// ginibre, symmetric and unitary come back as complex-linear operators;
/// selfadjoint_antilinear as (0, symmetric sample).
std::variant<RealLinearOp, Conjugation> sample(SampleKind kind,
                                               Eigen::Index n,
                                               std::uint64_t seed);

}  // namespace antilin
