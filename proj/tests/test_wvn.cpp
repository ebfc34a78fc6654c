#include "antilin/polar_spectral.hpp"
#include "antilin/schatten.hpp"
#include "antilin/wvn.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

using namespace antilin;
using namespace antilin::testing;

namespace {

/// A tau-fixed vector for tau = polar(a).tau: a real combination of the fixed
/// basis.
Vector fixed_vector(const RealLinearOp& a, Sampler& s) {
  const Matrix u = polar(a).takagi.u;
  return u * random_real_unit(s, u.cols());
}

double antilinear_commutator(const Matrix& p, const Matrix& m) {
  return opnorm(p * m - m * p.conjugate());
}

void expect_step_contract(const RealLinearOp& a, const Vector& f,
                          const ReduceStepResult& r, double bound) {
  const Eigen::Index n = a.dim();
  const Matrix& m = a.antilinear();
  const Matrix& mb = r.b_op.antilinear();
  const Matrix& mk = r.k_op.antilinear();
  const Matrix& p = r.p_proj;
  const Matrix perp = Matrix::Identity(n, n) - p;
  const double scale = std::max(1.0, opnorm(m));
  EXPECT_LE(opnorm(m - (mb - mk)), 1e-12 * scale);
  EXPECT_LE(antilinear_commutator(p, mb), 1e-9);
  EXPECT_LE(antilinear_commutator(perp, mb), 1e-9);
  EXPECT_LE(opnorm(mk - mk.transpose()), 1e-10);
  EXPECT_LE(opnorm(mb - mb.transpose()), 1e-10);
  EXPECT_LE(opnorm(p * p - p), 1e-10);
  const Matrix t = polar(a).tau.matrix();
  EXPECT_LE(antilinear_commutator(p, t), 1e-9);
  EXPECT_LT(r.achieved_norm, bound);
  EXPECT_NEAR(r.achieved_norm, schatten_norm(r.k_op, SchattenParams(2.0)), 1e-12);
  EXPECT_LE((perp * f).norm(), 1e-10 * f.norm());
  // Off-diagonal block bound with a roundoff allowance.
  const double off = opnorm(perp * m * p.conjugate());
  EXPECT_LE(off, r.width / r.partitions + 1e-12 * (1 + opnorm(m)));
}

}  // namespace

TEST(PartitionCount, SmallestAdmissible) {
  // 2 * 1 / m^{1/2} < 0.5  <=>  m > 16.
  EXPECT_EQ(partition_count(1.0, 0.5, 2.0, 1e30), 17.0);
  EXPECT_EQ(partition_count(0.0, 0.5, 2.0, 1e30), 1.0);
  EXPECT_EQ(partition_count(0.1, 1.0, 2.0, 1e30), 1.0);
  for (double q : {1.5, 2.0, 3.0}) {
    for (double width : {0.3, 1.0, 7.5}) {
      const double m = partition_count(width, 0.05, q, 1e30);
      EXPECT_LT(2.0 * width / std::pow(m, 1.0 / q), 0.05);
      if (m > 1.0 && m < 1e12) {
        EXPECT_GE(2.0 * width / std::pow(m - 1.0, 1.0 / q), 0.05);
      }
    }
  }
}

TEST(PartitionCount, MonotoneInQ) {
  double prev = 0.0;
  for (double q : {1.2, 1.5, 2.0, 3.0, 5.0}) {
    const double m = partition_count(2.0, 0.1, q, 1e300);
    EXPECT_GE(m, prev);
    prev = m;
  }
}

TEST(PartitionCount, CapReported) {
  try {
    partition_count(1.0, 1e-6, 3.0, 1e6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::partition_cap);
  }
  EXPECT_THROW(partition_count(1.0, 0.0, 2.0, 1e6), Error);
}

TEST(ReduceStep, ZeroOperator) {
  Vector f = Vector::Zero(4);
  f(1) = 1.0;
  const auto r = reduce_step(RealLinearOp::zero(4), f, 0.1, SchattenParams(2.0));
  EXPECT_EQ(r.partitions, 1.0);
  EXPECT_EQ(r.width, 0.0);
  EXPECT_EQ(r.k_op.antilinear().norm(), 0.0);
  EXPECT_LT(opnorm(r.p_proj - f * f.adjoint()), 1e-14);
  EXPECT_EQ(r.rank, 1);
}

TEST(ReduceStep, EigenvectorSeedGivesZeroPerturbation) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  m(2, 2) = 3.0;
  const auto a = RealLinearOp::antilinear_op(m);
  Vector f = Vector::Zero(3);
  f(1) = 1.0;
  const auto r = reduce_step(a, f, 0.1, SchattenParams(2.0));
  EXPECT_LT(r.k_op.antilinear().norm(), 1e-14);
  EXPECT_LT(opnorm(r.p_proj - f * f.adjoint()), 1e-12);
  expect_step_contract(a, f, r, 0.1);
}

TEST(ReduceStep, RandomSymmetric) {
  Sampler s(500);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = RealLinearOp::antilinear_op(s.symmetric(16));
    const Vector f = fixed_vector(a, s);
    const auto r = reduce_step(a, f, 0.1, SchattenParams(2.0));
    expect_step_contract(a, f, r, 0.1);
    EXPECT_NEAR(r.width, operator_norm(a), 1e-10);
    EXPECT_EQ(r.partitions, partition_count(r.width, 0.1, 2.0, 1e30));
  }
}

TEST(ReduceStep, OffDiagonalImagesAreOrthogonal) {
  Sampler s(501);
  for (Eigen::Index n : {4, 6, 8}) {
    const auto a = RealLinearOp::antilinear_op(s.symmetric(n));
    const Vector f = fixed_vector(a, s);
    const auto r = reduce_step(a, f, 0.5, SchattenParams(2.0));
    const Matrix perp = Matrix::Identity(n, n) - r.p_proj;
    const Matrix images = perp * a.antilinear() * r.g.conjugate();
    const Matrix gram = images.adjoint() * images;
    for (Eigen::Index i = 0; i < gram.rows(); ++i)
      for (Eigen::Index j = 0; j < gram.cols(); ++j)
        if (i != j) EXPECT_LT(std::abs(gram(i, j)), 1e-10);
  }
}

TEST(ReduceStep, Errors) {
  Sampler s(502);
  const auto a = RealLinearOp::antilinear_op(s.symmetric(5));
  EXPECT_THROW(reduce_step(a, Vector::Zero(5), 0.1, SchattenParams(2.0)), Error);
  // i times a fixed vector is not fixed.
  const Vector f = Complex(0, 1) * fixed_vector(a, s);
  try {
    reduce_step(a, f, 0.1, SchattenParams(2.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_tau_fixed);
  }
  const Vector g = fixed_vector(a, s);
  try {
    reduce_step(a, g, 1e-9, SchattenParams(3.0), WvnOptions{1e6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::partition_cap);
  }
  EXPECT_THROW(reduce_step(RealLinearOp::antilinear_op(s.ginibre(5)), g, 0.1, SchattenParams(2.0)),
               Error);
}

class WvnContract : public ::testing::Test {
 protected:
  static void check(const RealLinearOp& a, const WvnDecomposition& dec) {
    const Eigen::Index n = a.dim();
    const Matrix& m = a.antilinear();
    const Matrix& md = dec.d_op.antilinear();
    const Matrix& mk = dec.k_op.antilinear();
    EXPECT_LE(opnorm(m - md - mk), 1e-9 * (1 + opnorm(m)));
    EXPECT_LT(dec.achieved_norm, dec.epsilon);
    EXPECT_NEAR(dec.achieved_norm, schatten_norm(dec.k_op, SchattenParams(dec.p)), 1e-12);
    EXPECT_LE(opnorm(md - md.transpose()), 1e-10);
    EXPECT_LE(opnorm(mk - mk.transpose()), 1e-10);
    Matrix total = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
      total += dec.blocks[i].projection;
      for (std::size_t j = i + 1; j < dec.blocks.size(); ++j)
        EXPECT_LT(opnorm(dec.blocks[i].projection * dec.blocks[j].projection), 1e-9);
    }
    EXPECT_LT(opnorm(total - Matrix::Identity(n, n)), 1e-9);
    const Matrix basis = dec.eigenbasis();
    RealVector values = dec.eigenvalues();
    EXPECT_LT(unitarity_error(basis), 1e-9);
    for (Eigen::Index j = 0; j < n; ++j) {
      EXPECT_GE(values(j), 0.0);
      EXPECT_LT((antilin::apply(dec.d_op, basis.col(j)) - values(j) * basis.col(j)).norm(), 1e-8);
    }
    double ledger = 0.0;
    double budgets = 0.0;
    for (const auto& st : dec.steps) {
      EXPECT_LT(st.k_norm, st.budget);
      EXPECT_DOUBLE_EQ(st.budget, dec.epsilon / std::ldexp(1.0, st.index));
      ledger += st.k_norm;
      budgets += st.budget;
    }
    EXPECT_GE(ledger * (1 + 1e-12) + 1e-15, dec.achieved_norm);
    EXPECT_LT(budgets, dec.epsilon);
    // Weyl's inequality against an independent SVD: singular values of D and
    // A differ by at most ||K||.
    RealVector sd = jacobi_singular_values(md);
    RealVector sa = jacobi_singular_values(m);
    EXPECT_LE((sd - sa).cwiseAbs().maxCoeff(), opnorm(mk) + 1e-10);
    // The eigenvalues of D are its singular values.
    std::sort(values.data(), values.data() + n, std::greater<>());
    EXPECT_LT((values - sd).cwiseAbs().maxCoeff(), 1e-8);
  }
};

TEST_F(WvnContract, DiagonalNonnegativeInput) {
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal() << 3.0, 1.0, 0.5, 2.0;
  const auto a = RealLinearOp::antilinear_op(m);
  const auto dec = wvn_decompose(a, 0.05, SchattenParams(2.0));
  check(a, dec);
  EXPECT_LT(dec.k_op.antilinear().norm(), 1e-14);
  EXPECT_LT(opnorm(dec.d_op.antilinear() - m), 1e-14);
}

TEST_F(WvnContract, RandomAcrossExponents) {
  Sampler s(503);
  const auto a = RealLinearOp::antilinear_op(s.symmetric(12));
  const auto dec15 = wvn_decompose(a, 0.05, SchattenParams(1.5));
  const auto dec2 = wvn_decompose(a, 0.05, SchattenParams(2.0));
  const auto dec3 = wvn_decompose(a, 0.05, SchattenParams(3.0));
  check(a, dec15);
  check(a, dec2);
  check(a, dec3);
  // Same first budget and width: the partition count grows with q.
  EXPECT_GE(dec15.steps[0].partitions, dec2.steps[0].partitions);
  EXPECT_GE(dec2.steps[0].partitions, dec3.steps[0].partitions);
}

TEST_F(WvnContract, RankDeficientAndDegenerate) {
  Sampler s(504);
  RealVector sv(8);
  sv << 2, 2, 2, 1, 0, 0, 0, 0;
  const auto a = RealLinearOp::antilinear_op(symmetric_with_singular_values(s, sv));
  check(a, wvn_decompose(a, 0.01, SchattenParams(2.0)));
  check(RealLinearOp::zero(3), wvn_decompose(RealLinearOp::zero(3), 0.1, SchattenParams(2.0)));
}

TEST_F(WvnContract, Deterministic) {
  Sampler s(505);
  const auto a = RealLinearOp::antilinear_op(s.symmetric(6));
  const auto x = wvn_decompose(a, 0.1, SchattenParams(2.0));
  const auto y = wvn_decompose(a, 0.1, SchattenParams(2.0));
  EXPECT_EQ(x.d_op, y.d_op);
  EXPECT_EQ(x.k_op, y.k_op);
  ASSERT_EQ(x.steps.size(), y.steps.size());
  for (std::size_t i = 0; i < x.steps.size(); ++i) {
    EXPECT_EQ(x.steps[i].partitions, y.steps[i].partitions);
    EXPECT_EQ(x.steps[i].k_norm, y.steps[i].k_norm);
  }
}

TEST(Wvn, RejectsBadInput) {
  Sampler s(506);
  EXPECT_THROW(wvn_decompose(RealLinearOp::antilinear_op(s.ginibre(3)), 0.1, SchattenParams(2.0)),
               Error);
  EXPECT_THROW(wvn_decompose(RealLinearOp::antilinear_op(s.symmetric(3)), 0.0, SchattenParams(2.0)),
               Error);
}
