#include "matineq/matrix_io.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace matineq {
namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "complex entry must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json rows_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat rows_from_json(const Json& rows, Index n_rows, Index n_cols) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n_rows) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n_rows) + " rows");
  }
  Mat m(n_rows, n_cols);
  for (Index i = 0; i < n_rows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n_cols) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has wrong length");
    }
    for (Index k = 0; k < n_cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  if (!m.allFinite()) throw Error(ErrorCode::ParseError, "non-finite matrix entry");
  return m;
}

Index positive_size(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 1) {
    throw Error(ErrorCode::ParseError, std::string("missing or invalid \"") + key + "\"");
  }
  return static_cast<Index>(j[key].get<long long>());
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  return Json{{"dim", m.rows()}, {"entries", rows_to_json(m)}};
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "matrix must be an object");
  const Index n = positive_size(j, "dim");
  if (!j.contains("entries")) throw Error(ErrorCode::ParseError, "missing \"entries\"");
  return rows_from_json(j["entries"], n, n);
}

Json frame_to_json(const Mat& f) {
  return Json{{"rows", f.rows()}, {"cols", f.cols()}, {"entries", rows_to_json(f)}};
}

Mat frame_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "frame must be an object");
  const Index r = positive_size(j, "rows");
  const Index c = positive_size(j, "cols");
  if (!j.contains("entries")) throw Error(ErrorCode::ParseError, "missing \"entries\"");
  return rows_from_json(j["entries"], r, c);
}

Json cvec_to_json(const CVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

CVec cvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "vector must be an array");
  CVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json rvec_to_json(const RVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

RVec rvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "sequence must be an array");
  RVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(ErrorCode::ParseError, "sequence entries must be numbers");
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  return v;
}

Json number_to_json(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw Error(ErrorCode::ParseError, "expected a number");
}

}  // namespace matineq
