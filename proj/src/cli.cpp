#include "antilin/cli.hpp"

#include "antilin/core.hpp"
#include "antilin/csym.hpp"
#include "antilin/json_io.hpp"
#include "antilin/polar_spectral.hpp"
#include "antilin/random.hpp"
#include "antilin/schatten.hpp"
#include "antilin/spectra.hpp"
#include "antilin/takagi.hpp"
#include "antilin/wvn.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

namespace antilin::cli {

using json_io::json;

namespace {

const std::map<std::string, Subcommand> kSubcommands = {
    {"takagi", Subcommand::takagi},
    {"polar", Subcommand::polar},
    {"spectrum", Subcommand::spectrum},
    {"wvn", Subcommand::wvn},
    {"conj-basis", Subcommand::conj_basis},
    {"csym-approx", Subcommand::csym_approx},
    {"random", Subcommand::random},
    {"check", Subcommand::check},
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_input(const CliConfig& cfg) {
  std::ifstream in(cfg.input_path);
  if (!in) throw IoError("cannot open input file: " + cfg.input_path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed JSON in input: ") + e.what());
  }
}

double max_fixed_residual(const Matrix& t, const Matrix& basis) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    worst = std::max(
        worst, (t * basis.col(j).conjugate() - basis.col(j)).norm());
  }
  return worst;
}

json run_takagi(const CliConfig& cfg) {
  const RealLinearOp op = json_io::antilinear_from_json(read_input(cfg));
  if (!op.is_antilinear(cfg.tol * std::max(1.0, op.antilinear().norm()))) {
    throw Error(ErrorCode::not_antilinear,
                "takagi: input has a complex-linear part", op.linear().norm());
  }
  const auto t = takagi(op.antilinear(), cfg.tol);
  return {{"u", json_io::to_json(t.u)},
          {"d", json_io::to_json(t.d)},
          {"residual", spectral_norm(Matrix(op.antilinear() - t.reconstruct()))}};
}

json run_polar(const CliConfig& cfg) {
  const auto pf =
      polar(json_io::antilinear_from_json(read_input(cfg)), cfg.tol);
  return {{"modulus", json_io::to_json(pf.modulus)},
          {"tau", json_io::to_json(pf.tau.matrix())}};
}

json run_spectrum(const CliConfig& cfg) {
  ToleranceConfig tol{cfg.tol, cfg.tol};
  const auto measure =
      spectral_measure(json_io::antilinear_from_json(read_input(cfg)), tol);
  json atoms = json::array();
  for (const auto& atom : measure.atoms()) {
    atoms.push_back({{"lambda", atom.lambda},
                     {"projection", json_io::to_json(atom.projection)}});
  }
  return {{"atoms", atoms}, {"tau", json_io::to_json(measure.tau().matrix())}};
}

json wvn_to_json(const WvnDecomposition& dec) {
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    blocks.push_back({{"projection", json_io::to_json(b.projection)},
                      {"basis", json_io::to_json(b.basis)},
                      {"values", json_io::to_json(b.values)}});
  }
  json steps = json::array();
  for (const auto& s : dec.steps) {
    steps.push_back({{"index", s.index},
                     {"basis_index", s.basis_index},
                     {"fixed_part", s.fixed_part},
                     {"budget", s.budget},
                     {"m", s.partitions},
                     {"rank", s.rank},
                     {"k_norm", s.k_norm},
                     {"width", s.width},
                     {"off_diagonal_norm", s.off_diagonal_norm},
                     {"remaining_dim", s.remaining_dim}});
  }
  return {{"D", json_io::to_json(dec.d_op)},
          {"K", json_io::to_json(dec.k_op)},
          {"achieved_norm", dec.achieved_norm},
          {"epsilon", dec.epsilon},
          {"p", dec.p},
          {"blocks", blocks},
          {"steps", steps}};
}

json run_wvn(const CliConfig& cfg) {
  WvnOptions opts;
  opts.tol = cfg.tol;
  return wvn_to_json(wvn_decompose(json_io::antilinear_from_json(read_input(cfg)),
                                   cfg.epsilon, SchattenParams(cfg.p), opts));
}

json run_conj_basis(const CliConfig& cfg) {
  const Conjugation kappa =
      json_io::conjugation_from_json(read_input(cfg), cfg.tol);
  const Matrix basis = conjugation_eigenbasis(kappa);
  return {{"basis", json_io::to_json(basis)},
          {"residual", max_fixed_residual(kappa.matrix(), basis)}};
}

json run_csym(const CliConfig& cfg) {
  const json doc = read_input(cfg);
  const Matrix s = json_io::matrix_from_json(
      doc.contains("matrix") ? doc["matrix"] : json());
  require_square(s, "csym-approx input");
  Conjugation tau = Conjugation::standard(s.rows());
  if (doc.contains("tau")) {
    json t = doc["tau"];
    if (t.is_array()) t = json{{"dim", s.rows()}, {"matrix", t}};
    tau = json_io::conjugation_from_json(t, cfg.tol);
  }
  const TauSymmetricOp op(s, tau, cfg.tol);
  const SchattenParams params(cfg.p);
  WvnOptions opts;
  opts.tol = cfg.tol;
  const auto cd = approx_condiag(op, cfg.epsilon, params, opts);
  const auto fa = approx_factor(op, cfg.epsilon, params, opts);
  return {{"epsilon", cfg.epsilon},
          {"p", cfg.p},
          {"condiag",
           {{"u", json_io::to_json(cd.u)},
            {"d", json_io::to_json(cd.d)},
            {"op_norm_error", cd.op_norm_error},
            {"schatten_error", cd.schatten_error}}},
          {"factor",
           {{"kappa", json_io::to_json(fa.kappa.matrix())},
            {"d", json_io::to_json(fa.d)},
            {"basis", json_io::to_json(fa.basis)},
            {"schatten_error", fa.schatten_error}}}};
}

json run_random(const CliConfig& cfg) {
  if (!cfg.n || *cfg.n < 1) throw UsageError("random requires --n >= 1");
  const auto kind = parse_sample_kind(cfg.kind);
  const auto s = sample(kind, *cfg.n, cfg.seed);
  return std::visit([](const auto& v) { return json_io::to_json(v); }, s);
}

// ---------------------------------------------------------------------------
// check

struct CheckReport {
  json items = json::array();
  bool all_pass = true;

  void add(const std::string& name, double value, double limit) {
    const bool pass = std::isfinite(value) && value <= limit;
    items.push_back(
        {{"name", name}, {"pass", pass}, {"value", value}, {"limit", limit}});
    all_pass = all_pass && pass;
  }
};

void check_general(const RealLinearOp& op, const CliConfig& cfg,
                   CheckReport& report) {
  const Eigen::Index n = op.dim();
  Sampler sampler(cfg.seed);
  const double scale = 1.0 + operator_norm(op);

  report.add("adjoint_involution",
             adjoint(adjoint(op)) == op ? 0.0 : 1.0, 0.0);

  double realify_err = 0.0, additivity_err = 0.0, homogeneity_err = 0.0;
  const RealMatrix r = realify(op);
  for (int trial = 0; trial < 8; ++trial) {
    const Vector x = sampler.vector(n);
    const Vector y = sampler.vector(n);
    const double c = 4.0 * sampler.uniform() - 2.0;
    const Vector ax = antilin::apply(op, x);
    realify_err = std::max(realify_err, (unstack(r * stack(x)) - ax).norm() /
                                            (scale * x.norm()));
    additivity_err = std::max(
        additivity_err,
        (antilin::apply(op, x + y) - ax - antilin::apply(op, y)).norm() / (scale * (x.norm() + y.norm())));
    homogeneity_err = std::max(
        homogeneity_err, (antilin::apply(op, c * x) - c * ax).norm() / (scale * x.norm()));
  }
  report.add("realify_consistency", realify_err, 1e-12);
  report.add("additivity", additivity_err, 1e-12);
  report.add("real_homogeneity", homogeneity_err, 1e-12);

  const RealLinearOp other = RealLinearOp(sampler.ginibre(n), sampler.ginibre(n));
  const double hom =
      (realify(compose(op, other)) - r * realify(other)).norm() /
      (scale * realify(other).norm());
  report.add("realify_homomorphism", hom, 1e-12);
}

void check_selfadjoint(const RealLinearOp& op, const CliConfig& cfg,
                       CheckReport& report) {
  const Matrix& m = op.antilinear();
  const Eigen::Index n = op.dim();
  const double norm = operator_norm(op);
  const double scale = std::max(1.0, norm);

  const auto t = takagi(m, cfg.tol);
  report.add("takagi_reconstruction",
             spectral_norm(Matrix(m - t.reconstruct())) / scale, 1e-10);
  report.add("takagi_unitarity",
             spectral_norm(Matrix(t.u * t.u.adjoint() - Matrix::Identity(n, n))),
             1e-10);
  report.add("singular_values_match",
             (t.d - singular_values(op)).cwiseAbs().maxCoeff(), 1e-10);

  const auto pf = polar(op, cfg.tol);
  const Matrix& h = pf.modulus;
  const Matrix& tm = pf.tau.matrix();
  report.add("polar_modulus_tau",
             spectral_norm(Matrix(m - h * tm)) / (1.0 + norm), 1e-9);
  report.add("polar_tau_modulus",
             spectral_norm(Matrix(m - tm * h.conjugate())) / (1.0 + norm), 1e-9);
  Eigen::SelfAdjointEigenSolver<Matrix> heig(0.5 * (h + h.adjoint()));
  report.add("modulus_psd",
             std::max(0.0, -heig.eigenvalues()(0)) / scale, 1e-10);
  const auto cr = conjugation_residuals(tm);
  report.add("tau_conjugation",
             std::max({cr.symmetry, cr.unitarity, cr.involution}), 1e-10);

  const ToleranceConfig tol{cfg.tol, cfg.tol};
  const auto measure = spectral_measure(op, tol);
  Matrix total = Matrix::Zero(n, n);
  double commutation = 0.0, orthogonality = 0.0;
  for (std::size_t i = 0; i < measure.size(); ++i) {
    const Matrix& e = measure.atoms()[i].projection;
    total += e;
    commutation =
        std::max(commutation, spectral_norm(Matrix(e * tm - tm * e.conjugate())));
    for (std::size_t j = 0; j < i; ++j) {
      orthogonality = std::max(
          orthogonality, spectral_norm(Matrix(e * measure.atoms()[j].projection)));
    }
  }
  report.add("spectral_completeness",
             spectral_norm(Matrix(total - Matrix::Identity(n, n))), 1e-9);
  report.add("spectral_orthogonality", orthogonality, 1e-9);
  report.add("spectral_commutation", commutation, 1e-9);
  report.add(
      "spectral_reconstruction",
      spectral_norm(Matrix(m - reconstruct(measure).antilinear())) / scale,
      cfg.tol * static_cast<double>(measure.size()));

  WvnOptions opts;
  opts.tol = cfg.tol;
  const auto dec = wvn_decompose(op, cfg.epsilon, SchattenParams(cfg.p), opts);
  report.add("wvn_split",
             spectral_norm(Matrix(m - dec.d_op.antilinear() - dec.k_op.antilinear())) /
                 (1.0 + norm),
             1e-9);
  report.add("wvn_schatten_bound", dec.achieved_norm / cfg.epsilon,
             1.0 - 1e-15);
  const Matrix basis = dec.eigenbasis();
  const RealVector values = dec.eigenvalues();
  double eig_resid = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    eig_resid = std::max(eig_resid, (antilin::apply(dec.d_op, basis.col(j)) -
                                     values(j) * basis.col(j)).norm());
  }
  report.add("wvn_diagonal_residual", eig_resid, 1e-8);
  report.add("wvn_basis_orthonormal",
             spectral_norm(Matrix(basis.adjoint() * basis - Matrix::Identity(n, n))),
             1e-10);
}

json run_check(const CliConfig& cfg) {
  const json doc = read_input(cfg);
  CheckReport report;
  RealLinearOp op = RealLinearOp::zero(1);
  bool is_conjugation = false;
  if (doc.contains("matrix")) {
    op = json_io::antilinear_from_json(doc);
    // The conjugation suite applies only to matrices that are conjugations.
    const auto cr = conjugation_residuals(op.antilinear());
    if (std::max({cr.symmetry, cr.unitarity, cr.involution}) <= cfg.tol) {
      is_conjugation = true;
      report.add("conjugation_symmetry", cr.symmetry, cfg.tol);
      report.add("conjugation_unitarity", cr.unitarity, cfg.tol);
      report.add("conjugation_involution", cr.involution, cfg.tol);
      const Conjugation kappa(op.antilinear(), cfg.tol);
      const Matrix basis = conjugation_eigenbasis(kappa);
      report.add("conjugation_fixed_basis",
                 max_fixed_residual(kappa.matrix(), basis), 1e-10);
      double worst = 0.0;
      for (int k = 0; k < 16; ++k) {
        worst = std::max(worst, spectral_distance(
                                    op, std::polar(1.0, k * std::numbers::pi / 8)));
      }
      report.add("conjugation_unit_circle_spectrum", worst, cfg.tol);
    }
  } else {
    op = json_io::op_from_json(doc);
  }

  std::string kind = "real_linear";
  const double scale = std::max(1.0, op.antilinear().norm() + op.linear().norm());
  if (op.is_selfadjoint_antilinear(cfg.tol)) {
    kind = "selfadjoint_antilinear";
  } else if (op.is_antilinear(cfg.tol * scale)) {
    kind = "antilinear";
  } else if (op.is_complex_linear(cfg.tol * scale)) {
    kind = "complex_linear";
  }

  check_general(op, cfg, report);
  if (kind == "selfadjoint_antilinear") check_selfadjoint(op, cfg, report);
  return {{"kind", kind},
          {"conjugation", is_conjugation},
          {"checks", report.items},
          {"all_pass", report.all_pass}};
}

json dispatch(const CliConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::takagi: return run_takagi(cfg);
    case Subcommand::polar: return run_polar(cfg);
    case Subcommand::spectrum: return run_spectrum(cfg);
    case Subcommand::wvn: return run_wvn(cfg);
    case Subcommand::conj_basis: return run_conj_basis(cfg);
    case Subcommand::csym_approx: return run_csym(cfg);
    case Subcommand::random: return run_random(cfg);
    case Subcommand::check: return run_check(cfg);
  }
  throw UsageError("unknown subcommand");
}

bool needs_input(Subcommand s) { return s != Subcommand::random; }

void emit(const CliConfig& cfg, const json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + cfg.output_path);
  file << text;
  if (!file) throw IoError("failed writing output file: " + cfg.output_path);
}

constexpr const char* kSubcommandHelp =
    "Subcommands: random takagi polar spectrum wvn conj-basis csym-approx check\n"
    "Exit codes: 0 ok, 1 mathematical failure, 2 usage, 3 I/O or format\n";

struct HelpRequested {
  std::string text;
};

}  // namespace

CliConfig parse_args(const std::vector<std::string>& argv,
                     const std::optional<std::string>& env_tol) {
  CLI::App app{"antilin: antilinear self-adjoint operator toolkit"};
  CliConfig cfg;
  std::string command;
  std::optional<double> tol;
  std::optional<long> n;
  app.add_option("command", command, "subcommand")->required();
  app.add_option("--input", cfg.input_path, "input JSON file");
  app.add_option("--output", cfg.output_path, "output JSON file");
  app.add_option("--epsilon", cfg.epsilon, "Schatten-norm budget");
  app.add_option("--p", cfg.p, "Schatten exponent, 1 < p < inf");
  app.add_option("--tol", tol, "validation tolerance");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--n", n, "dimension for `random`");
  app.add_option("--kind", cfg.kind, "sample kind for `random`");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help() + kSubcommandHelp};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto it = kSubcommands.find(command);
  if (it == kSubcommands.end()) throw UsageError("unknown subcommand: " + command);
  cfg.subcommand = it->second;
  cfg.n = n;

  if (tol) {
    cfg.tol = *tol;
  } else if (env_tol) {
    try {
      std::size_t used = 0;
      cfg.tol = std::stod(*env_tol, &used);
      if (used != env_tol->size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw UsageError("ANTILIN_TOL is not a number: " + *env_tol);
    }
  }
  if (!(cfg.tol > 0.0) || cfg.tol > 1e-2) {
    throw UsageError("--tol must lie in (0, 1e-2]");
  }
  if (!(cfg.p > 1.0) || !std::isfinite(cfg.p)) {
    throw UsageError("--p must satisfy 1 < p < inf");
  }
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
    throw UsageError("--epsilon must be > 0");
  }
  if (needs_input(cfg.subcommand) && cfg.input_path.empty()) {
    throw UsageError(command + " requires --input");
  }
  if (cfg.subcommand == Subcommand::random) {
    if (!cfg.n || *cfg.n < 1) throw UsageError("random requires --n >= 1");
    try {
      parse_sample_kind(cfg.kind);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  return cfg;
}

ExitCode run(const CliConfig& cfg, std::ostream& out, std::ostream& diag) {
  json result;
  ExitCode code = ExitCode::ok;
  try {
    result = dispatch(cfg);
    if (cfg.subcommand == Subcommand::check && !result["all_pass"].get<bool>()) {
      code = ExitCode::math;
    }
  } catch (const Error& e) {
    diag << "error: " << e.what() << "\n";
    result = {{"error", std::string(to_string(e.code()))},
              {"residual", e.residual()}};
    code = ExitCode::math;
  } catch (const UsageError& e) {
    diag << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const IoError& e) {
    diag << "io error: " << e.what() << "\n";
    result = {{"error", "io_error"}, {"residual", 0.0}};
    code = ExitCode::io;
  } catch (const json_io::FormatError& e) {
    diag << "format error: " << e.what() << "\n";
    result = {{"error", "format_error"}, {"residual", 0.0}};
    code = ExitCode::io;
  }
  try {
    emit(cfg, result, out);
  } catch (const IoError& e) {
    diag << "io error: " << e.what() << "\n";
    return ExitCode::io;
  }
  return code;
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& diag) {
  std::optional<std::string> env_tol;
  if (const char* v = std::getenv("ANTILIN_TOL")) env_tol = std::string(v);
  CliConfig cfg;
  try {
    cfg = parse_args(argv, env_tol);
  } catch (const HelpRequested& h) {
    out << h.text;
    return static_cast<int>(ExitCode::ok);
  } catch (const UsageError& e) {
    diag << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  return static_cast<int>(run(cfg, out, diag));
}

}  // namespace antilin::cli
