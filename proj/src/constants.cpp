#include "matineq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matineq/error.hpp"

namespace matineq {

namespace {

constexpr double kGuard = 1e-12;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, std::string(name) + " is not finite");
}

void require_ordered_positive(double a, double b) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (!(b > 0.0)) throw Error(ErrorCode::NonPositive, "b must be > 0");
  if (a < b) throw Error(ErrorCode::BadOrder, "a must be >= b");
}

// a^q - b^q for a >= b >= 0 without cancellation when a is close to b.
double pow_diff(double a, double b, double q) {
  if (b == 0.0) return std::pow(a, q);
  return std::pow(b, q) * std::expm1(q * std::log(a / b));
}

}  // namespace

double kantorovich_factor(double a, double b) {
  require_ordered_positive(a, b);
  // below the guard the factor differs from 1 by less than (a-b)^2/(8ab)
  if (a - b <= kGuard * a) return 1.0;
  const double ab = a * b;
  if (std::isfinite(ab) && ab > 0.0) return (a + b) / (2.0 * std::sqrt(ab));
  return (a + b) / (2.0 * std::sqrt(a) * std::sqrt(b));
}

double ky_fan_K(double a, double b, double p, bool allow_unit_interval) {
  require_ordered_positive(a, b);
  require_finite(p, "p");
  if (!allow_unit_interval && p >= 0.0 && p <= 1.0 && std::abs(p - 1.0) > kGuard) {
    throw Error(ErrorCode::BadExponent, "K(a,b,p) is a reverse constant only for p > 1 or p < 0");
  }
  if (a - b <= kGuard * a || std::abs(p - 1.0) <= kGuard) return 1.0;
  if (p == 0.0) return 1.0;
  // With h = a/b the displayed expression reduces to
  //   (h^p - h)/((p-1)(h-1)) * ((p-1)/p * (h^p - 1)/(h^p - h))^p
  // and both factors are evaluated through expm1 so nearby h stays accurate.
  const double lh = std::log(a / b);
  const double hp_minus_1 = std::expm1(p * lh);        // h^p - 1
  const double h_minus_1 = std::expm1(lh);             // h - 1
  const double hp_minus_h = (a / b) * std::expm1((p - 1.0) * lh);  // h^p - h
  const double first = hp_minus_h / ((p - 1.0) * h_minus_1);
  const double inner = (p - 1.0) / p * hp_minus_1 / hp_minus_h;
  return first * std::pow(inner, p);
}

double furuta_C(double a, double b, double p) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(p, "p");
  if (!(p > 1.0)) throw Error(ErrorCode::BadExponent, "C(a,b,p) needs p > 1");
  if (b < 0.0) throw Error(ErrorCode::NonPositive, "b must be >= 0");
  if (a < b) throw Error(ErrorCode::BadOrder, "a must be >= b");
  if (a - b <= kGuard * std::max(a, 1.0)) return 0.0;
  const double slope = pow_diff(a, b, p) / (a - b);  // (a^p - b^p)/(a - b)
  const double first = (p - 1.0) * std::pow(slope / p, p / (p - 1.0));
  // (a b^p - b a^p)/(a - b) = -a b (a^{p-1} - b^{p-1})/(a - b)
  const double second = b == 0.0 ? 0.0 : -a * b * pow_diff(a, b, p - 1.0) / (a - b);
  return std::max(first + second, 0.0);
}

double gruss_bound(double p, double q, double r, double s) {
  require_finite(p, "p");
  require_finite(q, "q");
  require_finite(r, "r");
  require_finite(s, "s");
  if (p < q || r < s) throw Error(ErrorCode::BadOrder, "need p >= q and r >= s");
  return (p - q) * (r - s) / 4.0;
}

double additive_reverse_bound(double a, double b) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (b < 0.0 || !(a + b > 0.0)) throw Error(ErrorCode::NonPositive, "need b >= 0 and a + b > 0");
  if (a < b) throw Error(ErrorCode::BadOrder, "a must be >= b");
  const double d = a - b;
  return d * d / (4.0 * (a + b));
}

}  // namespace matineq
