#include "matineq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace matineq {

NormId NormId::schatten(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::BadNormId, "schatten exponent must be >= 1");
  }
  return NormId(Kind::Schatten, p, 0);
}

NormId NormId::ky_fan(int k) {
  if (k < 1) throw Error(ErrorCode::BadNormId, "ky fan index must be >= 1");
  return NormId(Kind::KyFan, 0.0, k);
}

NormId NormId::parse(std::string_view text) {
  if (text == "operator") return operator_norm();
  if (text == "frobenius") return frobenius();
  if (text == "trace") return trace();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto head = text.substr(0, colon);
    const std::string tail(text.substr(colon + 1));
    try {
      std::size_t used = 0;
      if (head == "schatten") {
        const double p = std::stod(tail, &used);
        if (used == tail.size()) return schatten(p);
      } else if (head == "kyfan") {
        const int k = std::stoi(tail, &used);
        if (used == tail.size()) return ky_fan(k);
      }
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::BadNormId, "cannot parse norm id '" + std::string(text) + "'");
}

std::string NormId::to_string() const {
  switch (kind_) {
    case Kind::Operator: return "operator";
    case Kind::Frobenius: return "frobenius";
    case Kind::Trace: return "trace";
    case Kind::KyFan: return "kyfan:" + std::to_string(k_);
    case Kind::Schatten: {
      std::ostringstream os;
      os.precision(17);
      os << "schatten:" << p_;
      return os.str();
    }
  }
  return {};
}

double norm(const SingularValueProfile& s, const NormId& id) {
  const RVec& mu = s.values;
  const Index n = mu.size();
  switch (id.kind()) {
    case NormId::Kind::Operator:
      return n == 0 ? 0.0 : mu(0);
    case NormId::Kind::Frobenius: {
      double acc = 0.0;
      for (Index j = 0; j < n; ++j) acc += mu(j) * mu(j);
      return std::sqrt(acc);
    }
    case NormId::Kind::Trace: {
      double acc = 0.0;
      for (Index j = 0; j < n; ++j) acc += mu(j);
      return acc;
    }
    case NormId::Kind::Schatten: {
      if (n == 0 || mu(0) == 0.0) return 0.0;
      // factor out mu_1 so large p cannot overflow
      double acc = 0.0;
      for (Index j = 0; j < n; ++j) acc += std::pow(mu(j) / mu(0), id.p());
      return mu(0) * std::pow(acc, 1.0 / id.p());
    }
    case NormId::Kind::KyFan: {
      if (id.k() > n) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(id.k()) + " exceeds dimension " + std::to_string(n));
      }
      double acc = 0.0;
      for (Index j = 0; j < id.k(); ++j) acc += mu(j);
      return acc;
    }
  }
  return 0.0;
}

double norm(const Mat& x, const NormId& id) { return norm(singular_values(x), id); }

RVec ky_fan_profile(const SingularValueProfile& s) {
  RVec out(s.values.size());
  double acc = 0.0;
  for (Index j = 0; j < s.values.size(); ++j) {
    acc += s.values(j);
    out(j) = acc;
  }
  return out;
}

RVec ky_fan_profile(const Mat& x) { return ky_fan_profile(singular_values(x)); }

DominanceResult dominates_profiles(const RVec& x_profile, const RVec& y_profile, double factor,
                                   double rel) {
  if (x_profile.size() != y_profile.size()) {
    throw Error(ErrorCode::DimensionMismatch, "ky fan profiles differ in length");
  }
  if (!(factor > 0.0)) throw Error(ErrorCode::NonPositive, "dominance factor must be > 0");
  DominanceResult out;
  out.holds = true;
  out.slacks.resize(x_profile.size());
  for (Index k = 0; k < x_profile.size(); ++k) {
    const double lhs = x_profile(k);
    const double rhs = factor * y_profile(k);
    out.slacks(k) = rhs - lhs;
    if (lhs > rhs + rel * std::max({1.0, std::abs(lhs), std::abs(rhs)})) out.holds = false;
  }
  return out;
}

DominanceResult dominates_all_symmetric_norms(const Mat& x, const Mat& y, double factor,
                                              double rel) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operands differ in shape");
  }
  return dominates_profiles(ky_fan_profile(x), ky_fan_profile(y), factor, rel);
}

}  // namespace matineq
