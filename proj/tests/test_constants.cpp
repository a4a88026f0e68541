#include "matineq/constants.hpp"

#include <functional>

#include "test_util.hpp"

using namespace matineq;
using namespace testutil;

namespace {

const double kRatios[] = {1.01, 2.0, 10.0, 100.0};

// Maximum of f on [0, 1]: a grid scan followed by golden-section refinement.
double maximize_unit(const std::function<long double(long double)>& f) {
  const int grid = 2000;
  int best = 0;
  for (int i = 1; i <= grid; ++i) {
    if (f(static_cast<long double>(i) / grid) > f(static_cast<long double>(best) / grid)) best = i;
  }
  long double lo = std::max(0, best - 1) / static_cast<long double>(grid);
  long double hi = std::min(grid, best + 1) / static_cast<long double>(grid);
  const long double g = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  for (int it = 0; it < 200; ++it) {
    const long double x1 = hi - g * (hi - lo);
    const long double x2 = lo + g * (hi - lo);
    if (f(x1) < f(x2)) {
      lo = x1;
    } else {
      hi = x2;
    }
  }
  return static_cast<double>(f((lo + hi) / 2));
}

// Ratio <h, Z^p h> / <h, Z h>^p maximized over unit vectors supported on the
// extreme eigenvectors of a spectrum {a, b}.
double two_point_K(double a, double b, double p) {
  return maximize_unit([=](long double t) {
    const long double m1 = t * a + (1 - t) * b;
    const long double mp = t * std::pow(static_cast<long double>(a), p) + (1 - t) * std::pow(static_cast<long double>(b), p);
    return mp / std::pow(m1, static_cast<long double>(p));
  });
}

double two_point_C(double a, double b, double p) {
  return maximize_unit([=](long double t) {
    const long double m1 = t * a + (1 - t) * b;
    const long double mp = t * std::pow(static_cast<long double>(a), p) + (1 - t) * std::pow(static_cast<long double>(b), p);
    return mp - std::pow(m1, static_cast<long double>(p));
  });
}

}  // namespace

TEST_CASE("Kantorovich factor") {
  CHECK(kantorovich_factor(1, 1) == 1.0);
  CHECK(kantorovich_factor(4, 1) == 1.25);
  CHECK(kantorovich_factor(2, 0.5) == 1.25);
  for (double r : kRatios) {
    CHECK(kantorovich_factor(1.0, 1.0 / r) == doctest::Approx(kantorovich_factor(r, 1.0)).epsilon(1e-14));
    CHECK(kantorovich_factor(r, 1.0) >= 1.0);
  }
  double prev = 1.0;
  for (double t = 1.0; t < 200.0; t *= 1.3) {
    const double k = kantorovich_factor(t, 1.0);
    CHECK(k >= prev);
    prev = k;
  }
  CHECK(code_of([] { kantorovich_factor(1, 0); }) == ErrorCode::NonPositive);
  CHECK(code_of([] { kantorovich_factor(1, 2); }) == ErrorCode::BadOrder);
}

TEST_CASE("Ky Fan constant closed forms") {
  CHECK(ky_fan_K(4, 1, 2) == doctest::Approx(1.5625).epsilon(1e-14));
  CHECK(ky_fan_K(2, 1, 2) == doctest::Approx(9.0 / 8.0).epsilon(1e-14));
  CHECK(ky_fan_K(1, 1, 3) == 1.0);
  CHECK(ky_fan_K(3, 2, 1.0 + 1e-13) == 1.0);
  for (double r : kRatios) {
    const double kf = kantorovich_factor(r, 1.0);
    CHECK(std::abs(ky_fan_K(r, 1.0, 2.0) - kf * kf) <= 1e-12 * kf * kf);
    CHECK(std::abs(ky_fan_K(r, 1.0, 2.0) * 4.0 * r - (r + 1) * (r + 1)) <= 1e-12 * (r + 1) * (r + 1));
  }
  CHECK(code_of([] { ky_fan_K(2, 0, 2); }) == ErrorCode::NonPositive);
  CHECK(code_of([] { ky_fan_K(2, 1, 0.5); }) == ErrorCode::BadExponent);
  CHECK_NOTHROW(ky_fan_K(2, 1, 0.5, true));
}

TEST_CASE("Ky Fan constant matches a two-point maximization for real exponents") {
  for (double r : kRatios) {
    for (double p : {-2.5, -1.0, -0.3, 1.5, 2.0, 2.7, 3.0, 4.0}) {
      const double k = ky_fan_K(r, 1.0, p);
      CHECK(k >= 1.0);
      CHECK(k == doctest::Approx(two_point_K(r, 1.0, p)).epsilon(1e-9));
    }
  }
  // inside (0, 1) the raw formula is the minimum of the same ratio
  for (double p : {0.25, 0.5, 0.8}) {
    const double lowest = -maximize_unit([=](long double t) {
      const long double m1 = t * 4.0L + (1 - t);
      return -(t * std::pow(4.0L, static_cast<long double>(p)) + (1 - t)) / std::pow(m1, static_cast<long double>(p));
    });
    CHECK(ky_fan_K(4.0, 1.0, p, true) == doctest::Approx(lowest).epsilon(1e-9));
  }
}

TEST_CASE("Ky Fan constant stays finite near the singular set") {
  for (double eps : {1e-6, 1e-9, 1e-11}) {
    CHECK(ky_fan_K(1.0 + eps, 1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(ky_fan_K(4.0, 1.0, 1.0 + eps) == doctest::Approx(1.0).epsilon(1e-4));
  }
  CHECK(std::isfinite(ky_fan_K(1e6, 1e-6, 5.0)));
}

TEST_CASE("Furuta constant") {
  CHECK(furuta_C(3, 1, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(furuta_C(1, 1, 3.5) == 0.0);
  CHECK(furuta_C(2, 0, 2) == doctest::Approx(1.0).epsilon(1e-14));
  for (double r : kRatios) {
    const double want = (r - 1) * (r - 1) / 4.0;
    CHECK(std::abs(furuta_C(r, 1.0, 2.0) - want) <= 1e-12 * std::max(1.0, want));
    for (double p : {1.5, 2.5, 3.0, 5.0}) {
      CHECK(furuta_C(r, 1.0, p) == doctest::Approx(two_point_C(r, 1.0, p)).epsilon(1e-9));
    }
  }
  CHECK(code_of([] { furuta_C(2, 1, 1); }) == ErrorCode::BadExponent);
  CHECK(code_of([] { furuta_C(2, -1, 2); }) == ErrorCode::NonPositive);
}

TEST_CASE("Furuta constant shrinks with the interval") {
  for (double p : {1.5, 2.0, 3.0, 4.5}) {
    for (double a : {2.0, 5.0, 20.0}) {
      for (double b : {0.0, 0.5, 1.0}) {
        const double c = furuta_C(a, b, p);
        for (double ta : {0.0, 0.25, 0.5, 1.0}) {
          for (double tb : {0.0, 0.3, 0.7}) {
            const double a2 = a - ta * (a - b) / 2;
            const double b2 = b + tb * (a2 - b) / 2;
            CHECK(furuta_C(a2, b2, p) <= c * (1 + 1e-12) + 1e-15);
          }
        }
      }
    }
  }
}

TEST_CASE("Gruss bound") {
  CHECK(gruss_bound(1, 0, 1, 0) == 0.25);
  CHECK(gruss_bound(2, 2, 5, 1) == 0.0);
  CHECK(gruss_bound(5, 2, 5, 2) == doctest::Approx(9.0 / 4.0));
  CHECK(code_of([] { gruss_bound(0, 1, 1, 0); }) == ErrorCode::BadOrder);
}

TEST_CASE("additive reverse bound") {
  CHECK(additive_reverse_bound(1, 1) == 0.0);
  CHECK(additive_reverse_bound(3, 1) == 0.25);
  CHECK(additive_reverse_bound(1, 0) == 0.25);
  CHECK(code_of([] { additive_reverse_bound(0, 0); }) == ErrorCode::NonPositive);
  CHECK(code_of([] { additive_reverse_bound(1, 2); }) == ErrorCode::BadOrder);
}
