#pragma once

#include <doctest.h>

#include <initializer_list>

#include "matineq/error.hpp"
#include "matineq/linalg.hpp"
#include "matineq/random.hpp"
#include "matineq/structure.hpp"

namespace testutil {

using namespace matineq;

inline Mat diag(std::initializer_list<double> v) {
  Mat m = Mat::Zero(static_cast<Index>(v.size()), static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

inline Mat real(std::initializer_list<std::initializer_list<double>> rows) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index k = 0;
    for (double x : r) m(i, k++) = x;
    ++i;
  }
  return m;
}

inline RVec rvec(std::initializer_list<double> v) {
  RVec r(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) r(i++) = x;
  return r;
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Mat random_psd(Index n, Rng& rng, double lo = 0.0, double hi = 1.0) {
  const Mat u = haar_unitary(n, rng);
  RVec s(n);
  for (Index i = 0; i < n; ++i) s(i) = rng.uniform(lo, hi);
  return u * s.cast<Complex>().asDiagonal() * u.adjoint();
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadConfig;
}

}  // namespace testutil
