#pragma once

#include "antilin/core.hpp"

#include "json.hpp"

namespace antilin::json_io {

using nlohmann::json;

// Exchange format: a complex scalar is [re, im]; a matrix is row-major
// nested arrays of scalars; a RealLinearOp is
// {"dim": n, "linear": [...], "antilinear": [...]}; a Conjugation is
// {"dim": n, "matrix": [...]}.

/// Thrown for structurally invalid documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(Complex z);
json to_json(const Matrix& m);
json to_json(const RealVector& v);
json to_json(const RealLinearOp& op);
json to_json(const Conjugation& c);

Complex complex_from_json(const json& j);
/// Accepts any rectangular nested array; callers check squareness.
Matrix matrix_from_json(const json& j);
RealLinearOp op_from_json(const json& j);
/// Validates the conjugation invariants against `tol`.
Conjugation conjugation_from_json(const json& j, double tol = 1e-8);

/// An antilinear operator given either as a RealLinearOp document or as
/// {"dim": n, "matrix": M} (read as x -> M conj(x)).
RealLinearOp antilinear_from_json(const json& j);

}  // namespace antilin::json_io
