#include "antilin/json_io.hpp"

#include <cmath>

namespace antilin::json_io {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const RealLinearOp& op) {
  return {{"dim", op.dim()},
          {"linear", to_json(op.linear())},
          {"antilinear", to_json(op.antilinear())}};
}

json to_json(const Conjugation& c) {
  return {{"dim", c.dim()}, {"matrix", to_json(c.matrix())}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw FormatError("complex scalar must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw FormatError("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("matrix rows must have equal length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
  }
  return m;
}

namespace {

Eigen::Index dim_of(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw FormatError("document must be an object with an integer \"dim\"");
  }
  const auto n = j["dim"].get<std::int64_t>();
  if (n < 1) throw FormatError("\"dim\" must be positive");
  return static_cast<Eigen::Index>(n);
}

Matrix square_field(const json& j, const char* key, Eigen::Index n) {
  if (!j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  Matrix m = matrix_from_json(j[key]);
  if (m.rows() != n || m.cols() != n) {
    throw FormatError(std::string("field \"") + key +
                      "\" does not match \"dim\"");
  }
  return m;
}

}  // namespace

RealLinearOp op_from_json(const json& j) {
  const auto n = dim_of(j);
  return {square_field(j, "linear", n), square_field(j, "antilinear", n)};
}

Conjugation conjugation_from_json(const json& j, double tol) {
  const auto n = dim_of(j);
  return Conjugation(square_field(j, "matrix", n), tol);
}

RealLinearOp antilinear_from_json(const json& j) {
  const auto n = dim_of(j);
  if (j.contains("matrix")) {
    return RealLinearOp::antilinear_op(square_field(j, "matrix", n));
  }
  return op_from_json(j);
}

}  // namespace antilin::json_io
