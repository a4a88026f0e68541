#pragma once

// JSON encodings for matrices and vectors.
//
//   square matrix: { "dim": n, "entries": [[ [re,im], ... ], ...] } row-major
//   frame:         { "rows": n, "cols": k, "entries": ... }           row-major
//   complex vector: [ [re,im], ... ]
//   real vector:    [ x, ... ]

#include <json.hpp>

#include "matineq/linalg.hpp"

namespace matineq {

using Json = nlohmann::json;

Json matrix_to_json(const Mat& m);
/// Rejects non-square payloads and dimension disagreements with ParseError.
Mat matrix_from_json(const Json& j);

Json frame_to_json(const Mat& f);
Mat frame_from_json(const Json& j);

Json cvec_to_json(const CVec& v);
CVec cvec_from_json(const Json& j);

Json rvec_to_json(const RVec& v);
RVec rvec_from_json(const Json& j);

/// Finite values as numbers; +/-inf as the strings "inf" / "-inf"; NaN as null.
Json number_to_json(double x);
double number_from_json(const Json& j);

}  // namespace matineq
