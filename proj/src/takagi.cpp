#include "antilin/takagi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace antilin {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Fixes the +-1 ambiguity of a Takagi column: the first entry of largest
// modulus gets a positive real part (positive imaginary part if real part
// vanishes).
void fix_sign(Eigen::Ref<Vector> u) {
  Eigen::Index k = 0;
  u.cwiseAbs().maxCoeff(&k);
  const Complex c = u(k);
  if (c.real() < 0.0 || (c.real() == 0.0 && c.imag() < 0.0)) u = -u;
}

}  // namespace

Matrix TakagiFactorization::reconstruct() const {
  return u * d.cast<Complex>().asDiagonal() * u.transpose();
}

TakagiFactorization takagi(const Matrix& m, double tol) {
  require_square(m, "takagi");
  const Eigen::Index n = m.rows();
  const double asym = (m - m.transpose()).norm();
  if (asym > tol * m.norm()) {
    throw Error(ErrorCode::not_symmetric, "takagi: input is not symmetric",
                asym / std::max(m.norm(), 1e-300));
  }
  const Matrix ms = 0.5 * (m + m.transpose());

  const RealMatrix r = realify(RealLinearOp::antilinear_op(ms));
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(r);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::convergence_failure,
                "takagi: symmetric eigensolver did not converge");
  }
  const RealVector& w = eig.eigenvalues();  // ascending
  const RealMatrix& v = eig.eigenvectors();

  // The n largest eigenvalues, descending; equal values keep solver order.
  std::vector<Eigen::Index> idx(n);
  std::iota(idx.begin(), idx.end(), n);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return w(a) > w(b); });

  TakagiFactorization out;
  out.d.resize(n);
  Matrix cand(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.d(j) = std::max(0.0, w(idx[j]));
    cand.col(j).real() = v.col(idx[j]).head(n);
    cand.col(j).imag() = v.col(idx[j]).tail(n);
  }

  const double dmax = out.d.size() > 0 ? out.d(0) : 0.0;
  const double zero_tol = 64.0 * kEps * static_cast<double>(n) * dmax;

  // Orthonormalize the columns with non-negligible values in descending
  // order. Each is already a unit vector orthogonal to the others up to
  // O(eps ||M|| / d_j), so the reconstruction moves by O(eps ||M||).
  Eigen::Index kept = 0;
  while (kept < n && out.d(kept) > zero_tol) ++kept;
  out.u.resize(n, n);
  for (Eigen::Index j = 0; j < kept; ++j) {
    Vector x = cand.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        x -= out.u.col(i) * out.u.col(i).dot(x);
      }
    }
    const double nx = x.norm();
    if (nx < 0.5) {
      throw Error(ErrorCode::convergence_failure,
                  "takagi: eigenvectors lost orthogonality", 1.0 - nx);
    }
    out.u.col(j) = x / nx;
  }
  if (kept < n) {
    out.u.rightCols(n - kept) = orthonormal_complement(out.u.leftCols(kept));
  }
  for (Eigen::Index j = 0; j < n; ++j) fix_sign(out.u.col(j));

  const double resid = (m - out.reconstruct()).norm();
  if (resid > 1e-8 * std::max(1.0, m.norm())) {
    throw Error(ErrorCode::residual_failure,
                "takagi: reconstruction residual too large", resid);
  }
  return out;
}

AntilinearEigensystem antilinear_eig(const RealLinearOp& a, double tol) {
  const double scale = std::max(1.0, a.antilinear().norm());
  if (a.linear().norm() > tol * scale) {
    throw Error(ErrorCode::not_antilinear,
                "antilinear_eig: operator has a complex-linear part",
                a.linear().norm());
  }
  auto t = takagi(a.antilinear(), tol);
  return {std::move(t.u), std::move(t.d)};
}

AntilinearEigensystem absorb_phases(const Matrix& basis,
                                    const Eigen::VectorXcd& values) {
  require_same_dim(basis.cols(), values.size(), "absorb_phases");
  AntilinearEigensystem out{basis, RealVector(values.size())};
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    out.values(j) = std::abs(values(j));
    out.basis.col(j) *= std::polar(1.0, 0.5 * std::arg(values(j)));
  }
  return out;
}

CommonEigenvector common_eigenvector(const Matrix& n_op, const RealLinearOp& s,
                                     const ToleranceConfig& tol) {
  tol.validate();
  require_square(n_op, "common_eigenvector");
  require_same_dim(n_op.rows(), s.dim(), "common_eigenvector");
  const Eigen::Index n = n_op.rows();
  const Matrix& ms = s.antilinear();

  if (!s.is_selfadjoint_antilinear(tol.validation_tol)) {
    throw Error(ErrorCode::not_symmetric,
                "common_eigenvector: S is not self-adjoint antilinear",
                (ms - ms.transpose()).norm());
  }
  const double nn = n_op.norm();
  const double normal_resid =
      (n_op * n_op.adjoint() - n_op.adjoint() * n_op).norm();
  if (normal_resid > tol.validation_tol * std::max(1.0, nn * nn)) {
    throw Error(ErrorCode::not_normal, "common_eigenvector: N is not normal",
                normal_resid);
  }
  const double comm_resid = (n_op * ms - ms * n_op.transpose()).norm();
  if (comm_resid > tol.validation_tol * std::max(1.0, nn * ms.norm())) {
    throw Error(ErrorCode::commutation_violated,
                "common_eigenvector: N S != S N^*", comm_resid);
  }

  Eigen::ComplexSchur<Matrix> schur(n_op);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::convergence_failure,
                "common_eigenvector: Schur decomposition failed");
  }
  const Matrix& q = schur.matrixU();
  const Eigen::VectorXcd lam = schur.matrixT().diagonal();

  // Single-linkage grouping of eigenvalues.
  const double lmax = lam.cwiseAbs().maxCoeff();
  const double gap = tol.cluster_tol * std::max(1.0, lmax);
  std::vector<Eigen::Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(lam(i) - lam(j)) <= gap) parent[find(j)] = find(i);

  struct Group {
    std::vector<Eigen::Index> members;
    Complex mean;
  };
  std::vector<Group> groups;
  std::vector<Eigen::Index> group_of(n, -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<Eigen::Index>(groups.size());
      groups.push_back({});
    }
    groups[group_of[root]].members.push_back(i);
  }
  for (auto& g : groups) {
    Complex sum = 0.0;
    for (auto i : g.members) sum += lam(i);
    g.mean = sum / static_cast<double>(g.members.size());
  }
  const auto best = std::min_element(
      groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.members.size() != b.members.size())
          return a.members.size() > b.members.size();
        if (std::abs(a.mean) != std::abs(b.mean))
          return std::abs(a.mean) < std::abs(b.mean);
        return std::arg(a.mean) < std::arg(b.mean);
      });

  const auto k = static_cast<Eigen::Index>(best->members.size());
  Matrix w(n, k);
  for (Eigen::Index j = 0; j < k; ++j) w.col(j) = q.col(best->members[j]);

  const Matrix sw_image = ms * w.conjugate();
  const double invariance =
      (sw_image - w * (w.adjoint() * sw_image)).norm();
  if (invariance >
      tol.validation_tol * std::max(1.0, ms.norm())) {
    throw Error(ErrorCode::commutation_violated,
                "common_eigenvector: eigenspace of N is not S-invariant",
                invariance);
  }

  Matrix restricted = w.adjoint() * sw_image;
  restricted = 0.5 * (restricted + restricted.transpose());
  const auto t = takagi(restricted, tol.validation_tol);

  CommonEigenvector out;
  out.z = w * t.u.col(0);
  out.z /= out.z.norm();
  out.lambda = best->mean;
  out.r = t.d(0);
  out.eigenspace_dim = k;
  out.invariance_residual = invariance;
  return out;
}

CommutingPairDiagonalization diagonalize_commuting_pair(
    const Matrix& n_op, const RealLinearOp& s, const ToleranceConfig& tol) {
  require_square(n_op, "diagonalize_commuting_pair");
  require_same_dim(n_op.rows(), s.dim(), "diagonalize_commuting_pair");
  const Eigen::Index n = n_op.rows();

  CommutingPairDiagonalization out;
  out.basis.resize(n, n);
  Matrix rest = Matrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Matrix n_r = rest.adjoint() * n_op * rest;
    Matrix m_r = rest.adjoint() * s.antilinear() * rest.conjugate();
    m_r = 0.5 * (m_r + m_r.transpose());
    const auto ce =
        common_eigenvector(n_r, RealLinearOp::antilinear_op(m_r), tol);
    out.basis.col(k) = rest * ce.z;
    out.lambdas.push_back(ce.lambda);
    out.rs.push_back(ce.r);
    if (rest.cols() > 1) rest = rest * orthonormal_complement(ce.z);
  }
  return out;
}

}  // namespace antilin
