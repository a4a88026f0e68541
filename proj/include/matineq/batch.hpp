#pragma once

// Batched verification of one law over seeded random instances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matineq/laws.hpp"
#include "matineq/matrix_io.hpp"

namespace matineq {

struct DimRange {
  int lo = 2;
  int hi = 4;

  /// Parses "lo..hi" or a single integer. Throws BadConfig.
  static DimRange parse(const std::string& text);
  int count() const noexcept { return hi - lo + 1; }
};

struct BatchConfig {
  int trials = 100;
  DimRange dims;
  std::uint64_t master_seed = 0;
  TolerancePolicy tolerance;
  CheckOptions options;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// Replay key of a generated instance: (law, dim, seed) regenerates it.
struct InstanceKey {
  std::string law;
  int dim = 0;
  std::uint64_t seed = 0;
  double slack = 0.0;
};

struct Report {
  std::string law;
  int trials = 0;
  DimRange dims;
  std::uint64_t master_seed = 0;
  int violations = 0;
  int hypothesis_failures = 0;
  /// +inf when no trial produced a finite verdict.
  double min_slack = 0.0;
  std::optional<InstanceKey> worst_instance;
  /// First few violating instances, in trial order.
  std::vector<InstanceKey> violating;
  TolerancePolicy tolerance;
};

/// Trials for each dim: an even split with the remainder going to the
/// smallest dims.
std::vector<int> split_trials(int trials, const DimRange& dims);

/// Seed of trial `index` at dimension `dim`.
std::uint64_t trial_seed(std::uint64_t master, int dim, int index);

/// Runs the trials in parallel; the result does not depend on the number of
/// workers. Throws BadConfig when trials < 1 or the dims are invalid.
Report batch_verify(const LawDefinition& law, const BatchConfig& cfg);
Report batch_verify(const std::string& law_id, const BatchConfig& cfg);

Json to_json(const Report& report);
Json to_json(const InstanceKey& key);

}  // namespace matineq
