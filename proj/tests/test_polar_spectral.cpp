#include "antilin/polar_spectral.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

using namespace antilin;
using namespace antilin::testing;

namespace {

void expect_polar_contract(const Matrix& m, const PolarForm& pf) {
  const Matrix& h = pf.modulus;
  const Matrix& t = pf.tau.matrix();
  EXPECT_LT(opnorm(h - h.adjoint()), 1e-10);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10 * std::max(1.0, opnorm(h)));
  EXPECT_LE(opnorm(m - h * t), 1e-9);
  EXPECT_LE(opnorm(m - t * h.conjugate()), 1e-9);
  const auto r = conjugation_residuals(t);
  EXPECT_LT(std::max({r.symmetry, r.unitarity, r.involution}), 1e-10);
}

Matrix projector(const Matrix& cols) { return cols * cols.adjoint(); }

}  // namespace

TEST(SqrtPsd, Examples) {
  EXPECT_LT(opnorm(sqrt_psd(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)), 1e-15);
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 4.0;
  h(1, 1) = 9.0;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  EXPECT_LT(opnorm(sqrt_psd(h) - expected), 1e-14);
}

TEST(SqrtPsd, RandomGram) {
  Sampler s(300);
  const Matrix g = s.ginibre(10);
  const Matrix h = g.adjoint() * g;
  const Matrix r = sqrt_psd(h);
  EXPECT_LT(opnorm(r - r.adjoint()), 1e-12);
  EXPECT_LE(opnorm(r * r - h), 1e-10 * std::max(1.0, opnorm(h)));
}

TEST(SqrtPsd, RejectsNegative) {
  Matrix h = Matrix::Identity(2, 2);
  h(1, 1) = -1.0;
  try {
    sqrt_psd(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_psd);
  }
}

TEST(Polar, StandardConjugation) {
  const auto pf = polar(Conjugation::standard(4).as_op());
  EXPECT_LT(opnorm(pf.modulus - Matrix::Identity(4, 4)), 1e-12);
  EXPECT_LT(opnorm(pf.tau.matrix() - Matrix::Identity(4, 4)), 1e-12);
}

TEST(Polar, NegativeScalar) {
  Matrix m(1, 1);
  m(0, 0) = -9.0;
  const auto pf = polar(RealLinearOp::antilinear_op(m));
  EXPECT_NEAR(std::abs(pf.modulus(0, 0) - Complex(9, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(pf.tau.matrix()(0, 0) - Complex(-1, 0)), 0.0, 1e-14);
}

TEST(Polar, RandomSymmetric) {
  Sampler s(301);
  const Matrix m = s.symmetric(12);
  const auto pf = polar(RealLinearOp::antilinear_op(m));
  expect_polar_contract(m, pf);
  // Modulus is the square root of the matrix of A*A.
  EXPECT_LT(opnorm(pf.modulus - sqrt_psd(m * m.conjugate())), 1e-9);
}

TEST(Polar, RankDeficientKernelAgreement) {
  Sampler s(302);
  RealVector sv(7);
  sv << 4, 2, 2, 1, 0, 0, 0;
  const Matrix m = symmetric_with_singular_values(s, sv);
  const auto pf = polar(RealLinearOp::antilinear_op(m));
  expect_polar_contract(m, pf);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pf.modulus);
  int rank_h = 0;
  for (Eigen::Index i = 0; i < 7; ++i) rank_h += es.eigenvalues()(i) > 1e-8 ? 1 : 0;
  const RealVector msv = jacobi_singular_values(m);
  int rank_m = 0;
  for (Eigen::Index i = 0; i < 7; ++i) rank_m += msv(i) > 1e-8 ? 1 : 0;
  EXPECT_EQ(rank_h, 4);
  EXPECT_EQ(rank_h, rank_m);
}

TEST(Polar, RejectsNonSelfAdjoint) {
  Sampler s(303);
  EXPECT_THROW(polar(RealLinearOp::antilinear_op(s.ginibre(3))), Error);
}

TEST(SpectralMeasure, StandardConjugation) {
  const auto mu = spectral_measure(Conjugation::standard(3).as_op());
  ASSERT_EQ(mu.size(), 1u);
  EXPECT_NEAR(mu.atoms()[0].lambda, 1.0, 1e-12);
  EXPECT_LT(opnorm(mu.atoms()[0].projection - Matrix::Identity(3, 3)), 1e-12);
}

TEST(SpectralMeasure, DiagonalExample) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  const auto mu = spectral_measure(RealLinearOp::antilinear_op(m));
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_NEAR(mu.atoms()[0].lambda, 2.0, 1e-12);
  EXPECT_NEAR(mu.atoms()[1].lambda, 1.0, 1e-12);
  Matrix e2 = Matrix::Zero(2, 2);
  e2(1, 1) = 1.0;
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 0) = 1.0;
  EXPECT_LT(opnorm(mu.atoms()[0].projection - e2), 1e-12);
  EXPECT_LT(opnorm(mu.atoms()[1].projection - e1), 1e-12);
}

TEST(SpectralMeasure, GluedSingularValuesShareAnAtom) {
  Sampler s(304);
  RealVector sv(5);
  sv << 3.0, 2.0 + 1e-12, 2.0, 0.5, 0.1;
  const Matrix u = s.unitary(5);
  const Matrix m = u * sv.cast<Complex>().asDiagonal() * u.transpose();
  const auto mu = spectral_measure(RealLinearOp::antilinear_op(m));
  ASSERT_EQ(mu.size(), 4u);
  EXPECT_LT(opnorm(mu.atoms()[1].projection - projector(u.middleCols(1, 2))), 1e-9);
}

TEST(SpectralMeasure, InvariantsAndCommutation) {
  Sampler s(305);
  RealVector sv(8);
  sv << 5, 5, 3, 2, 2, 2, 1, 0;
  const Matrix m = symmetric_with_singular_values(s, sv);
  const auto mu = spectral_measure(RealLinearOp::antilinear_op(m));
  ASSERT_EQ(mu.size(), 5u);
  const Matrix& t = mu.tau().matrix();
  Matrix total = Matrix::Zero(8, 8);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Matrix& e = mu.atoms()[i].projection;
    total += e;
    EXPECT_LT(opnorm(e * e - e), 1e-9);
    EXPECT_LT(opnorm(e - e.adjoint()), 1e-9);
    EXPECT_LT(opnorm(e * t - t * e.conjugate()), 1e-9);
    for (std::size_t j = i + 1; j < mu.size(); ++j) {
      EXPECT_LT(opnorm(e * mu.atoms()[j].projection), 1e-9);
    }
  }
  EXPECT_LT(opnorm(total - Matrix::Identity(8, 8)), 1e-9);
}

TEST(SpectralMeasure, ProjectionsOfCommutingHermitianCommuteWithTau) {
  // A Hermitian H' commuting with tau' = U U^T has the form U D U^* with D
  // real symmetric; its spectral projections commute with tau' as well.
  Sampler s(306);
  const Matrix u = s.unitary(6);
  const Matrix t = u * u.transpose();
  RealMatrix d = RealMatrix::Zero(6, 6);
  RealMatrix q(6, 6);
  for (Eigen::Index i = 0; i < q.size(); ++i) q(i) = 2.0 * s.uniform() - 1.0;
  Eigen::HouseholderQR<RealMatrix> qr(q);
  const RealMatrix o = qr.householderQ();
  RealVector ev(6);
  ev << 1, 1, 2, 3, 3, 3;
  d = o * ev.asDiagonal() * o.transpose();
  const Matrix h = u * d.cast<Complex>() * u.adjoint();
  EXPECT_LT(opnorm(h * t - t * h.conjugate()), 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  for (double lam : {1.0, 2.0, 3.0}) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < 6; ++i)
      if (std::abs(es.eigenvalues()(i) - lam) < 1e-8) idx.push_back(i);
    Matrix cols(6, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k)
      cols.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(idx[k]);
    const Matrix e = projector(cols);
    EXPECT_LT(opnorm(e * t - t * e.conjugate()), 1e-9);
  }
}

TEST(SpectralMeasure, ConstructorRejectsInvalidAtoms) {
  const auto tau = Conjugation::standard(2);
  Matrix half = Matrix::Zero(2, 2);
  half(0, 0) = 1.0;
  EXPECT_THROW(SpectralMeasure({{1.0, half}}, tau), Error);
  Matrix other = Matrix::Zero(2, 2);
  other(1, 1) = 1.0;
  EXPECT_THROW(SpectralMeasure({{1.0, half}, {2.0, other}}, tau), Error);
  EXPECT_NO_THROW(SpectralMeasure({{2.0, half}, {1.0, other}}, tau));
}

TEST(MeasureOf, FullEmptyAndAdditivity) {
  Sampler s(307);
  RealVector sv(6);
  sv << 4, 3, 2.5, 2, 1, 0.5;
  const Matrix m = symmetric_with_singular_values(s, sv);
  const auto mu = spectral_measure(RealLinearOp::antilinear_op(m));
  ASSERT_EQ(mu.size(), 6u);
  const auto full = measure_of(mu, {0, 1, 2, 3, 4, 5});
  EXPECT_LT(opnorm(full.matrix() - mu.tau().matrix()), 1e-10);
  const auto empty = measure_of(mu, {});
  EXPECT_EQ(empty.matrix().norm(), 0.0);
  const auto f1 = measure_of(mu, {0, 3});
  const auto f2 = measure_of(mu, {2, 5});
  const auto f12 = measure_of(mu, {0, 2, 3, 5});
  EXPECT_LT(opnorm(f12.matrix() - f1.matrix() - f2.matrix()), 1e-10);
  // F(M)^2 = E(M) and F(M) self-adjoint.
  const auto sq = compose(f12.as_op(), f12.as_op());
  EXPECT_LT(opnorm(sq.linear() - f12.range_projection()), 1e-10);
  EXPECT_LT(opnorm(f12.matrix() - f12.matrix().transpose()), 1e-10);
  EXPECT_THROW(measure_of(mu, {6}), Error);
}

TEST(Reconstruct, Examples) {
  const auto tau = Conjugation::standard(3);
  const auto mu = spectral_measure(tau.as_op());
  EXPECT_EQ(reconstruct(mu), tau.as_op());
  Sampler s(308);
  const auto kappa = s.conjugation(4);
  const SpectralMeasure single({{2.5, Matrix::Identity(4, 4)}}, kappa);
  const auto r = reconstruct(single);
  EXPECT_LT(opnorm(r.antilinear() - 2.5 * kappa.matrix()), 1e-12);
  EXPECT_EQ(r.linear().norm(), 0.0);
}

TEST(Reconstruct, RoundTrip) {
  Sampler s(309);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix m = s.symmetric(10);
    const auto a = RealLinearOp::antilinear_op(m);
    const auto mu = spectral_measure(a, {1e-8, 1e-10});
    const auto r = reconstruct(mu);
    EXPECT_LE(opnorm(r.antilinear() - m), 1e-8 * opnorm(m));
    EXPECT_EQ(r.linear().norm(), 0.0);
  }
}
