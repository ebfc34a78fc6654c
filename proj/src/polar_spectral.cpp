#include "antilin/polar_spectral.hpp"

#include <algorithm>
#include <cmath>

namespace antilin {

Matrix sqrt_psd(const Matrix& h, double tol) {
  require_square(h, "sqrt_psd");
  const double herm = (h - h.adjoint()).norm();
  const double scale = std::max(1.0, h.norm());
  if (herm > tol * scale) {
    throw Error(ErrorCode::not_hermitian, "sqrt_psd: input is not Hermitian",
                herm);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (h + h.adjoint()));
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::convergence_failure,
                "sqrt_psd: eigensolver did not converge");
  }
  const RealVector& w = eig.eigenvalues();
  const double wmax = w.cwiseAbs().maxCoeff();
  if (w(0) < -tol * wmax) {
    throw Error(ErrorCode::not_psd, "sqrt_psd: input has a negative eigenvalue",
                w(0));
  }
  const RealVector root = w.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.cast<Complex>().asDiagonal() *
         eig.eigenvectors().adjoint();
}

namespace {

void require_selfadjoint_antilinear(const RealLinearOp& a, double tol,
                                    const char* what) {
  const double scale = std::max(1.0, a.antilinear().norm());
  if (a.linear().norm() > tol * scale) {
    throw Error(ErrorCode::not_antilinear,
                std::string(what) + ": operator has a complex-linear part",
                a.linear().norm());
  }
}

}  // namespace

PolarForm polar(const RealLinearOp& a, double tol) {
  require_selfadjoint_antilinear(a, tol, "polar");
  auto t = takagi(a.antilinear(), tol);
  Matrix modulus = t.u * t.d.cast<Complex>().asDiagonal() * t.u.adjoint();
  Conjugation tau(t.u * t.u.transpose());
  return {std::move(modulus), std::move(tau), std::move(t)};
}

SpectralMeasure::SpectralMeasure(std::vector<SpectralAtom> atoms,
                                 Conjugation tau, double tol)
    : atoms_(std::move(atoms)), tau_(std::move(tau)) {
  const Eigen::Index n = tau_.dim();
  const Matrix& t = tau_.matrix();
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Matrix& e = atoms_[i].projection;
    require_square(e, "SpectralMeasure atom");
    require_same_dim(e.rows(), n, "SpectralMeasure atom");
    if (i > 0 && !(atoms_[i].lambda < atoms_[i - 1].lambda)) {
      throw Error(ErrorCode::invalid_parameter,
                  "SpectralMeasure: atoms must be strictly descending");
    }
    if (atoms_[i].lambda < 0.0) {
      throw Error(ErrorCode::invalid_parameter,
                  "SpectralMeasure: atom values must be nonnegative");
    }
    const double idem = (e * e - e).norm() + (e - e.adjoint()).norm();
    if (idem > tol) {
      throw Error(ErrorCode::not_hermitian,
                  "SpectralMeasure: atom is not an orthogonal projection",
                  idem);
    }
    const double comm = (e * t - t * e.conjugate()).norm();
    if (comm > tol) {
      throw Error(ErrorCode::commutation_violated,
                  "SpectralMeasure: atom does not commute with tau", comm);
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double cross = (e * atoms_[j].projection).norm();
      if (cross > tol) {
        throw Error(ErrorCode::not_orthonormal,
                    "SpectralMeasure: atoms are not mutually orthogonal",
                    cross);
      }
    }
    sum += e;
  }
  const double completeness = (sum - Matrix::Identity(n, n)).norm();
  if (completeness > tol) {
    throw Error(ErrorCode::residual_failure,
                "SpectralMeasure: atoms do not sum to the identity",
                completeness);
  }
}

SpectralMeasure spectral_measure(const RealLinearOp& a,
                                 const ToleranceConfig& tol) {
  tol.validate();
  PolarForm pf = polar(a, tol.validation_tol);
  const auto& u = pf.takagi.u;
  const auto& d = pf.takagi.d;
  const Eigen::Index n = d.size();
  const double gap = tol.cluster_tol * d(0);

  std::vector<SpectralAtom> atoms;
  Eigen::Index start = 0;
  for (Eigen::Index j = 1; j <= n; ++j) {
    if (j == n || d(j - 1) - d(j) > gap) {
      const Eigen::Index len = j - start;
      const Matrix block = u.middleCols(start, len);
      atoms.push_back({d.segment(start, len).mean(), block * block.adjoint()});
      start = j;
    }
  }
  return SpectralMeasure(std::move(atoms), std::move(pf.tau),
                         tol.validation_tol);
}

AntilinearProjection measure_of(const SpectralMeasure& measure,
                                const std::set<std::size_t>& index_set) {
  const Eigen::Index n = measure.tau().dim();
  Matrix e = Matrix::Zero(n, n);
  for (auto i : index_set) {
    if (i >= measure.size()) {
      throw Error(ErrorCode::invalid_index,
                  "measure_of: atom index " + std::to_string(i) +
                      " out of range");
    }
    e += measure.atoms()[i].projection;
  }
  return AntilinearProjection(e * measure.tau().matrix(), e);
}

RealLinearOp reconstruct(const SpectralMeasure& measure) {
  const Eigen::Index n = measure.tau().dim();
  Matrix h = Matrix::Zero(n, n);
  for (const auto& atom : measure.atoms()) h += atom.lambda * atom.projection;
  return RealLinearOp::antilinear_op(h * measure.tau().matrix());
}

}  // namespace antilin
