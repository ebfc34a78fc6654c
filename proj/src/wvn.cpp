#include "antilin/wvn.hpp"

#include "antilin/polar_spectral.hpp"
#include "antilin/takagi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace antilin {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex I_UNIT{0.0, 1.0};

void require_selfadjoint(const RealLinearOp& a, double tol, const char* what) {
  const double scale = std::max(1.0, a.antilinear().norm());
  if (a.linear().norm() > tol * scale) {
    throw Error(ErrorCode::not_antilinear,
                std::string(what) + ": operator has a complex-linear part",
                a.linear().norm());
  }
  const double asym = (a.antilinear() - a.antilinear().transpose()).norm();
  if (asym > tol * scale) {
    throw Error(ErrorCode::not_symmetric,
                std::string(what) + ": operator is not self-adjoint", asym);
  }
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

ReduceStepResult reduce_with_polar(const Matrix& m, const PolarForm& pf,
                                   const Vector& f, double bound,
                                   const SchattenParams& params,
                                   const WvnOptions& options) {
  const Eigen::Index n = m.rows();
  require_same_dim(n, f.size(), "reduce_step");
  const double fnorm = f.norm();
  if (!(fnorm > 0.0)) {
    throw Error(ErrorCode::zero_vector, "reduce_step: f must be nonzero");
  }
  if (!(bound > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "reduce_step: bound must be > 0");
  }
  const double fix = (pf.tau.apply(f) - f).norm();
  if (fix > options.tol * fnorm) {
    throw Error(ErrorCode::not_tau_fixed,
                "reduce_step: f is not fixed by the polar conjugation", fix);
  }

  const Matrix& u = pf.takagi.u;
  const RealVector& d = pf.takagi.d;
  const double width = d(0);
  const double parts =
      partition_count(width, bound, params.q(), options.max_partitions);
  const double h = width / parts;

  // Spectral subspaces of |A| for each occupied subinterval, ascending k.
  std::map<double, std::vector<Eigen::Index>> bins;
  for (Eigen::Index j = 0; j < n; ++j) {
    double k = 0.0;
    if (width > 0.0) k = std::min(parts - 1.0, std::floor(d(j) / h));
    bins[k].push_back(j);
  }

  std::vector<Vector> pieces;
  for (const auto& [k, cols] : bins) {
    Vector fk = Vector::Zero(n);
    for (auto j : cols) fk += u.col(j) * u.col(j).dot(f);
    const double nk = fk.norm();
    if (nk > options.vanish_tol * fnorm) pieces.push_back(fk / nk);
  }

  ReduceStepResult out{Matrix(), RealLinearOp::zero(n), RealLinearOp::zero(n),
                       0.0, parts, width, 0.0, 0, Matrix()};
  out.rank = static_cast<Eigen::Index>(pieces.size());
  out.g.resize(n, out.rank);
  for (Eigen::Index k = 0; k < out.rank; ++k) out.g.col(k) = pieces[k];
  out.p_proj = out.g * out.g.adjoint();

  const Matrix p_perp = Matrix::Identity(n, n) - out.p_proj;
  const Matrix lower = p_perp * m * out.p_proj.conjugate();  // P_perp A P
  const Matrix upper = out.p_proj * m * p_perp.conjugate();  // P A P_perp
  const Matrix k_mat = symmetrized(-(lower + upper));
  out.k_op = RealLinearOp::antilinear_op(k_mat);
  out.b_op = RealLinearOp::antilinear_op(m + k_mat);
  out.off_diagonal_norm = spectral_norm(lower);
  out.achieved_norm = schatten_norm(out.k_op, params);
  if (!(out.achieved_norm < bound)) {
    throw Error(ErrorCode::residual_failure,
                "reduce_step: achieved norm does not meet the bound",
                out.achieved_norm);
  }
  return out;
}

}  // namespace

double partition_count(double width, double bound, double q, double cap) {
  if (!(bound > 0.0) || !(q > 1.0) || width < 0.0) {
    throw Error(ErrorCode::invalid_parameter,
                "partition_count: need bound > 0, q > 1, width >= 0");
  }
  if (width == 0.0) return 1.0;
  auto ok = [&](double m) {
    return 2.0 * width / std::pow(m, 1.0 / q) < bound;
  };
  const double t = std::pow(2.0 * width / bound, q);
  if (!std::isfinite(t) || t >= cap) {
    throw Error(ErrorCode::partition_cap,
                "partition count exceeds the configured cap", t);
  }
  double m = std::max(1.0, std::floor(t) + 1.0);
  while (!ok(m)) m += std::max(1.0, m * 4.0 * kEps);
  while (m > 1.0 && m - 1.0 != m && ok(m - 1.0)) m -= 1.0;
  if (m > cap) {
    throw Error(ErrorCode::partition_cap,
                "partition count exceeds the configured cap", m);
  }
  return m;
}

ReduceStepResult reduce_step(const RealLinearOp& a, const Vector& f,
                             double bound, const SchattenParams& params,
                             const WvnOptions& options) {
  require_selfadjoint(a, options.tol, "reduce_step");
  const PolarForm pf = polar(a, options.tol);
  return reduce_with_polar(a.antilinear(), pf, f, bound, params, options);
}

Matrix WvnDecomposition::eigenbasis() const {
  const Eigen::Index n = d_op.dim();
  Matrix out(n, n);
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    out.middleCols(c, b.basis.cols()) = b.basis;
    c += b.basis.cols();
  }
  return out;
}

RealVector WvnDecomposition::eigenvalues() const {
  RealVector out(d_op.dim());
  Eigen::Index c = 0;
  for (const auto& b : blocks) {
    out.segment(c, b.values.size()) = b.values;
    c += b.values.size();
  }
  return out;
}

WvnDecomposition wvn_decompose(const RealLinearOp& a, double epsilon,
                               const SchattenParams& params,
                               const WvnOptions& options) {
  require_selfadjoint(a, options.tol, "wvn_decompose");
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::invalid_parameter, "wvn_decompose: epsilon must be > 0");
  }
  const Eigen::Index n = a.dim();
  const Matrix& m = a.antilinear();
  const Matrix fixed_basis = polar(a, options.tol).takagi.u;

  Matrix perturbation = Matrix::Zero(n, n);  // sum of the K_j
  Matrix rest = Matrix::Identity(n, n);      // uncovered subspace
  std::vector<Matrix> block_spans;
  std::vector<WvnStep> steps;
  Eigen::Index next = 0;

  for (int j = 1; rest.cols() > 0; ++j) {
    Eigen::Index seed = -1;
    Vector projected;
    for (Eigen::Index t = 0; t < n; ++t) {
      const Eigen::Index i = (next + t) % n;
      projected = rest.adjoint() * fixed_basis.col(i);
      if (projected.norm() > options.cover_tol) {
        seed = i;
        break;
      }
    }
    if (seed < 0) {
      throw Error(ErrorCode::residual_failure,
                  "wvn_decompose: tau-fixed basis does not reach the "
                  "uncovered subspace");
    }
    next = seed + 1;

    const Matrix current = m + perturbation;
    const Matrix restricted =
        symmetrized(rest.adjoint() * current * rest.conjugate());
    const PolarForm pf =
        polar(RealLinearOp::antilinear_op(restricted), options.tol);

    // Split the projected e_j into its tau_r-fixed parts f = x + i y.
    const Vector flipped = pf.tau.apply(projected);
    const Vector re_part = 0.5 * (projected + flipped);
    const Vector im_part = (projected - flipped) / (2.0 * I_UNIT);
    const bool use_real = re_part.norm() >= im_part.norm();
    const Vector f = use_real ? re_part : im_part;

    const double budget = epsilon / std::ldexp(1.0, j);
    const auto step =
        reduce_with_polar(restricted, pf, f, budget, params, options);

    perturbation += rest * step.k_op.antilinear() * rest.transpose();
    block_spans.push_back(rest * step.g);
    steps.push_back({j, seed, use_real ? "real" : "imag", budget,
                     step.partitions, step.width, step.off_diagonal_norm,
                     step.rank, rest.cols(), step.achieved_norm});
    rest = rest.cols() > step.rank ? Matrix(rest * orthonormal_complement(step.g))
                                   : Matrix(n, 0);
  }

  const Matrix d_mat = symmetrized(m + perturbation);
  WvnDecomposition out{RealLinearOp::antilinear_op(d_mat),
                       RealLinearOp::antilinear_op(m - d_mat),
                       {},
                       std::move(steps),
                       params.p(),
                       epsilon,
                       0.0};
  for (const auto& span : block_spans) {
    const Matrix local = symmetrized(span.adjoint() * d_mat * span.conjugate());
    const auto t = takagi(local, options.tol);
    out.blocks.push_back({span * span.adjoint(), span * t.u, t.d});
  }
  out.achieved_norm = schatten_norm(out.k_op, params);
  if (!(out.achieved_norm < epsilon)) {
    throw Error(ErrorCode::residual_failure,
                "wvn_decompose: achieved norm does not meet epsilon",
                out.achieved_norm);
  }
  return out;
}

}  // namespace antilin
