#pragma once

// Unitarily invariant norms and the Ky Fan dominance test.

#include <string>
#include <string_view>

#include "matineq/linalg.hpp"

namespace matineq {

class NormId {
 public:
  enum class Kind { Operator, Frobenius, Trace, Schatten, KyFan };

  static NormId operator_norm() { return NormId(Kind::Operator, 0.0, 0); }
  static NormId frobenius() { return NormId(Kind::Frobenius, 0.0, 0); }
  static NormId trace() { return NormId(Kind::Trace, 0.0, 0); }
  /// Throws BadNormId unless p >= 1.
  static NormId schatten(double p);
  /// Throws BadNormId unless k >= 1. The upper bound k <= dim is checked at evaluation.
  static NormId ky_fan(int k);

  /// "operator" | "frobenius" | "trace" | "schatten:<p>" | "kyfan:<k>"
  static NormId parse(std::string_view text);
  std::string to_string() const;

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  int k() const noexcept { return k_; }

  friend bool operator==(const NormId&, const NormId&) = default;

 private:
  NormId(Kind kind, double p, int k) : kind_(kind), p_(p), k_(k) {}
  Kind kind_;
  double p_;
  int k_;
};

double norm(const SingularValueProfile& s, const NormId& id);
double norm(const Mat& x, const NormId& id);

/// Cumulative sums (||X||_(1), ..., ||X||_(n)).
RVec ky_fan_profile(const SingularValueProfile& s);
RVec ky_fan_profile(const Mat& x);

struct DominanceResult {
  bool holds = false;
  /// factor * ||Y||_(k) - ||X||_(k), k = 1..n
  RVec slacks;
};

/// Default relative comparison tolerance: lhs <= rhs + rel * max(1, lhs, rhs).
inline constexpr double kComparisonRel = 1e-9;

/// ||X|| <= factor ||Y|| for every symmetric norm, decided by the Ky Fan sweep.
DominanceResult dominates_all_symmetric_norms(const Mat& x, const Mat& y, double factor,
                                              double rel = kComparisonRel);
DominanceResult dominates_profiles(const RVec& x_profile, const RVec& y_profile, double factor,
                                   double rel = kComparisonRel);

}  // namespace matineq
