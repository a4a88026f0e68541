#pragma once

// The inequality registry. Each law knows its operand roles, how to check its
// hypotheses, how to evaluate both sides and how to draw instances that
// satisfy the hypotheses by construction.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matineq/linalg.hpp"
#include "matineq/random.hpp"

namespace matineq {

enum class ComparisonMode { Scalar, PerSingularValue, Loewner, AllSymmetricNorms };
enum class LawShape { Matrix, Sequence };

std::string_view to_string(ComparisonMode mode);

enum class RoleKind {
  General,      // square complex matrix
  Hermitian,
  Psd,
  PosDef,
  Normal,
  Projection,
  Nonnegative,  // real entrywise-nonnegative square matrix
  Frame,        // n x k orthonormal columns
  UnitVector,
  Vector,
  RealSequence,
  PositiveSequence,
  NonnegSequence,
  Scalar,
};

bool is_square_kind(RoleKind kind);
bool is_sequence_kind(RoleKind kind);

struct RoleSpec {
  std::string name;
  RoleKind kind;
  /// Roles sharing a nonempty group are jointly diagonal (a monotone pair).
  std::string group;
};

struct Provenance {
  enum class Kind { Generated, File, Literal };
  Kind kind = Kind::Literal;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string path;
};

std::string_view to_string(Provenance::Kind kind);

struct LawInstance {
  std::string law;
  std::map<std::string, Mat> matrices;
  std::map<std::string, CVec> vectors;
  std::map<std::string, RVec> sequences;
  std::map<std::string, double> scalars;
  Provenance provenance;

  /// Throw ShapeMismatch when the role is absent.
  const Mat& mat(const std::string& role) const;
  const CVec& vec(const std::string& role) const;
  const RVec& seq(const std::string& role) const;
  double scalar(const std::string& role) const;

  /// Common dimension (square size, vector or sequence length).
  Index dim() const;
};

/// One compared index: holds when lhs <= rhs within tolerance. `factor` is
/// the multiplicative constant already folded into rhs (1 when there is none).
struct ComparisonRow {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double factor = 1.0;
};

struct TolerancePolicy {
  double rel = 1e-9;
  double abs = 1e-12;

  /// rel * max(1, |lhs|, |rhs|) + abs
  double allowance(double lhs, double rhs) const;
  bool row_holds(const ComparisonRow& row) const;
  void validate() const;
};

/// Evaluation output. Side conditions of the evaluation (e.g. a trace that
/// must be real) are recorded as failed assertions.
struct Evaluation {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> failed_assertions;

  void add(std::string label, double lhs, double rhs, double factor = 1.0);
  /// Real part of z after asserting |Im z| <= 1e-9 * max(1, |z|, scale).
  double real_checked(Complex z, const std::string& what, double scale = 1.0);
};

struct Hypotheses {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& message);
  bool ok() const noexcept { return failures.empty(); }
};

struct LawDefinition {
  std::string id;
  ComparisonMode mode = ComparisonMode::Scalar;
  LawShape shape = LawShape::Matrix;
  std::string summary;
  std::vector<RoleSpec> roles;
  /// The bound is a constant factor between nonnegative sides, so lhs/rhs
  /// is a meaningful sharpness measure.
  bool multiplicative = false;
  int min_dim = 1;

  std::function<void(const LawInstance&, Hypotheses&)> hypotheses;
  std::function<void(const LawInstance&, Evaluation&)> evaluate;
  std::function<LawInstance(int dim, Rng& rng)> generate;
  /// Recomputes derived scalars (spectral bounds) after operands change.
  std::function<void(LawInstance&)> refresh;
  /// Extremal constructions derived from a base instance (may be empty).
  std::function<std::vector<LawInstance>(const LawInstance&)> warm_starts;

  const RoleSpec* role(const std::string& name) const;
};

struct Verdict {
  std::string law;
  bool hypothesis_ok = false;
  std::vector<std::string> diagnostics;
  std::vector<ComparisonRow> rows;
  /// min over rows of rhs - lhs; NaN when hypotheses fail.
  double slack = 0.0;
  /// nullopt when the hypotheses are not met.
  std::optional<bool> holds;
  TolerancePolicy tolerance;

  bool violated() const noexcept { return holds.has_value() && !*holds; }
};

struct CheckOptions {
  /// Evaluates even when hypotheses fail (for exercising the violation path).
  bool skip_hypotheses = false;
};

const std::vector<LawDefinition>& registry();
/// Throws UnknownLaw.
const LawDefinition& find_law(std::string_view id);

/// Throws ShapeMismatch when roles are missing or inconsistent.
void validate_shape(const LawDefinition& law, const LawInstance& inst);

Verdict check(const LawDefinition& law, const LawInstance& inst, const TolerancePolicy& tol = {},
              const CheckOptions& options = {});

/// Deterministic per (law, dim, seed). Throws UnsupportedDim.
LawInstance random_instance(const LawDefinition& law, int dim, std::uint64_t seed);
LawInstance random_instance(std::string_view id, int dim, std::uint64_t seed);

}  // namespace matineq
