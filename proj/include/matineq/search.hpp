#pragma once

// Sharpness probing of multiplicative laws, brute-force rearrangement
// oracle, determinant subspace sweeps and counterexample hunts.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matineq/laws.hpp"
#include "matineq/matrix_io.hpp"

namespace matineq {

struct SearchConfig {
  long budget = 10000;
  int restarts = 8;
  double step_scale = 0.1;
  int dim = 3;
  std::uint64_t seed = 0;
  /// Exponent for the Schatten hunts.
  double p = 4.0;
  /// Starting instance for sharpness search (restart 0 and the base of
  /// every warm start); random when absent.
  std::optional<LawInstance> start;
  /// Roles kept fixed during sharpness search.
  std::set<std::string> frozen;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;

  /// Throws BadConfig.
  void validate() const;
};

enum class SearchVerdict { CounterexampleFound, BoundNearlyAttained, Inconclusive };

std::string_view to_string(SearchVerdict v);

struct SearchResult {
  std::string target;
  SearchVerdict verdict = SearchVerdict::Inconclusive;
  /// "ratio" (achieved and bound are constants, achieved <= bound when the
  /// law holds) or "slack" (achieved is the smallest normalized slack).
  std::string measure = "ratio";
  double achieved = 0.0;
  double bound = 0.0;
  long evaluations = 0;
  std::optional<LawInstance> instance;
  /// True for hunts on open questions: the result is evidence only.
  bool open_problem = false;
  std::string note;
};

Json to_json(const SearchResult& r);

/// (min, max) of sum a_i b_sigma(i) over all permutations. Throws TooLong
/// above length 9 and DimensionMismatch.
std::pair<double, double> brute_force_rearrangement(const RVec& a, const RVec& b);

/// Largest normalized ratio lhs / rhs over the rows of a checked instance
/// (1 means the bound is attained) together with the factor of that row.
/// nullopt when hypotheses fail or no row has a right side above roundoff.
std::optional<std::pair<double, double>> bound_ratio(const LawDefinition& law, const LawInstance& inst);

/// Random-restart hill climbing on lhs/rhs. Throws NoBound for laws without
/// a multiplicative constant.
SearchResult sharpness_search(const LawDefinition& law, const SearchConfig& cfg);

struct SweepResult {
  /// Normalized slack of the law's direction (monotone: det(AB)_E - det A_E det B_E,
  /// antimonotone: the reverse), divided by max(1, |both sides|).
  double min_slack = 0.0;
  Mat frame;
  long evaluated = 0;
};

/// All coordinate subspaces plus `samples` random frames per dimension in
/// `dims` (every dimension 1..n when empty). Throws BadConfig when (A, B) is
/// not an ordered pair.
SweepResult subspace_sweep(const Mat& a, const Mat& b, const std::vector<int>& dims, int samples,
                           std::uint64_t seed);

inline constexpr std::string_view kSchattenAbove2 = "SCHATTEN-P-GT-2";
inline constexpr std::string_view kSchattenBelow2 = "SCHATTEN-P-IN-1-2";
inline constexpr std::string_view kDetAllSubspaces = "DET-ANTIMONOTONE-ALL-SUBSPACES";

std::vector<std::string> problem_ids();

/// ||AZB||_p / ||ZAB||_p for an instance with roles A, B, Z.
double schatten_ratio(const LawInstance& inst, double p);

/// Throws UnknownProblem; BadConfig for an exponent outside the problem's range.
SearchResult counterexample_hunt(std::string_view problem, const SearchConfig& cfg);

}  // namespace matineq
