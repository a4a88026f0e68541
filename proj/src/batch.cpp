#include "matineq/batch.hpp"

#include <cmath>
#include <limits>

#include "matineq/random.hpp"
#include "parallel.hpp"

namespace matineq {

DimRange DimRange::parse(const std::string& text) {
  DimRange r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw Error(ErrorCode::BadConfig, "bad dims '" + text + "'");
    } else {
      const std::string lo = text.substr(0, dots);
      const std::string hi = text.substr(dots + 2);
      r.lo = std::stoi(lo, &used);
      if (used != lo.size()) throw Error(ErrorCode::BadConfig, "bad dims '" + text + "'");
      r.hi = std::stoi(hi, &used);
      if (used != hi.size()) throw Error(ErrorCode::BadConfig, "bad dims '" + text + "'");
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadConfig, "bad dims '" + text + "'");
  }
  if (r.lo < 1 || r.hi < r.lo) throw Error(ErrorCode::BadConfig, "empty dims '" + text + "'");
  return r;
}

std::vector<int> split_trials(int trials, const DimRange& dims) {
  const int n = dims.count();
  std::vector<int> out(static_cast<std::size_t>(n), trials / n);
  for (int i = 0; i < trials % n; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, int dim, int index) {
  return derive_seed(master, static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(index));
}

namespace {

struct Trial {
  int dim = 0;
  int index = 0;
  std::uint64_t seed = 0;
};

struct Outcome {
  bool hypothesis_failed = false;
  bool violated = false;
  double slack = 0.0;
};

Outcome run_trial(const LawDefinition& law, const Trial& t, const BatchConfig& cfg) {
  Outcome out;
  try {
    const LawInstance inst = random_instance(law, t.dim, t.seed);
    const Verdict v = check(law, inst, cfg.tolerance, cfg.options);
    out.hypothesis_failed = !v.hypothesis_ok;
    out.violated = v.violated();
    out.slack = v.slack;
  } catch (const Error&) {
    // a generator that cannot produce a valid instance counts as a failure
    out.violated = true;
    out.slack = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace

Report batch_verify(const LawDefinition& law, const BatchConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::BadConfig, "trials must be >= 1");
  if (cfg.dims.lo < 1 || cfg.dims.hi < cfg.dims.lo) throw Error(ErrorCode::BadConfig, "empty dims");
  cfg.tolerance.validate();
  if (cfg.dims.lo < law.min_dim || cfg.dims.hi > 64) {
    throw Error(ErrorCode::UnsupportedDim, law.id + " needs dims in [" + std::to_string(law.min_dim) + ", 64]");
  }

  std::vector<Trial> trials;
  const auto per_dim = split_trials(cfg.trials, cfg.dims);
  for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
    const int count = per_dim[static_cast<std::size_t>(d - cfg.dims.lo)];
    for (int i = 0; i < count; ++i) trials.push_back({d, i, trial_seed(cfg.master_seed, d, i)});
  }

  const auto outcomes = detail::parallel_map<Outcome>(
      trials.size(), cfg.workers, [&](std::size_t i) { return run_trial(law, trials[i], cfg); });

  Report r;
  r.law = law.id;
  r.trials = cfg.trials;
  r.dims = cfg.dims;
  r.master_seed = cfg.master_seed;
  r.tolerance = cfg.tolerance;
  r.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const Outcome& o = outcomes[i];
    const InstanceKey key{law.id, trials[i].dim, trials[i].seed, o.slack};
    if (o.hypothesis_failed) ++r.hypothesis_failures;
    if (o.violated) {
      ++r.violations;
      if (r.violating.size() < 10) r.violating.push_back(key);
    }
    // NaN slack (failed evaluation) ranks as the worst possible outcome
    const double s = std::isnan(o.slack) && o.violated ? -std::numeric_limits<double>::infinity() : o.slack;
    if (std::isnan(s)) continue;
    if (!r.worst_instance || s < r.min_slack) {
      r.min_slack = s;
      r.worst_instance = key;
    }
  }
  return r;
}

Report batch_verify(const std::string& law_id, const BatchConfig& cfg) {
  return batch_verify(find_law(law_id), cfg);
}

Json to_json(const InstanceKey& key) {
  return Json{{"law", key.law},
              {"provenance", "generated"},
              {"dim", key.dim},
              {"seed", key.seed},
              {"slack", number_to_json(key.slack)}};
}

Json to_json(const Report& r) {
  Json j;
  j["law"] = r.law;
  j["trials"] = r.trials;
  j["dims"] = {{"lo", r.dims.lo}, {"hi", r.dims.hi}};
  j["master_seed"] = r.master_seed;
  j["violations"] = r.violations;
  j["hypothesis_failures"] = r.hypothesis_failures;
  j["min_slack"] = number_to_json(r.min_slack);
  j["worst_instance"] = r.worst_instance ? to_json(*r.worst_instance) : Json(nullptr);
  j["violating_instances"] = Json::array();
  for (const auto& k : r.violating) j["violating_instances"].push_back(to_json(k));
  j["tolerance"] = {{"rel", r.tolerance.rel}, {"abs", r.tolerance.abs}};
  return j;
}

}  // namespace matineq
