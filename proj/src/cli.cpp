#include "matineq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "matineq/batch.hpp"
#include "matineq/instance_io.hpp"
#include "matineq/search.hpp"

namespace matineq {

namespace {

struct Options {
  std::string law;
  std::string problem;
  int trials = 1000;
  std::string dims = "2..6";
  int dim = 3;
  std::uint64_t seed = 0;
  long budget = 10000;
  int restarts = 8;
  double p = 4.0;
  double rel_tol = TolerancePolicy{}.rel;
  double abs_tol = TolerancePolicy{}.abs;
  std::string instance;
  std::string out;
  unsigned workers = 0;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json verdict_to_json(const Verdict& v, const LawInstance& inst) {
  Json j;
  j["law"] = v.law;
  j["hypothesis_ok"] = v.hypothesis_ok;
  j["holds"] = v.holds ? Json(*v.holds) : Json(nullptr);
  j["slack"] = number_to_json(v.slack);
  j["diagnostics"] = v.diagnostics;
  j["rows"] = Json::array();
  for (const auto& r : v.rows) {
    j["rows"].push_back({{"label", r.label},
                         {"lhs", number_to_json(r.lhs)},
                         {"rhs", number_to_json(r.rhs)},
                         {"factor", number_to_json(r.factor)}});
  }
  j["tolerance"] = {{"rel", v.tolerance.rel}, {"abs", v.tolerance.abs}};
  j["instance"] = instance_to_json(inst);
  return j;
}

void emit(Json report, const Options& o, std::ostream& out, const std::string& summary) {
  report["timestamp"] = timestamp();
  if (o.out.empty()) {
    out << report.dump(2) << '\n';
  } else {
    write_json_file(report, o.out);
    out << summary << '\n';
  }
}

int verify(const Options& o, std::ostream& out, std::ostream& err) {
  const TolerancePolicy tol{o.rel_tol, o.abs_tol};
  tol.validate();
  if (!o.instance.empty()) {
    const LawInstance inst = load_instance(o.instance);
    if (!o.law.empty() && o.law != inst.law) {
      throw Error(ErrorCode::BadConfig, "instance is for " + inst.law + ", not " + o.law);
    }
    const Verdict v = check(find_law(inst.law), inst, tol);
    std::ostringstream s;
    s << inst.law << ": " << (!v.hypothesis_ok ? "hypotheses fail" : v.violated() ? "VIOLATED" : "holds")
      << ", slack " << v.slack;
    emit(verdict_to_json(v, inst), o, out, s.str());
    if (!v.hypothesis_ok) {
      for (const auto& d : v.diagnostics) err << "hypothesis: " << d << '\n';
      return kExitConfig;
    }
    return v.violated() ? kExitViolation : kExitOk;
  }
  if (o.law.empty()) throw Error(ErrorCode::BadConfig, "verify needs --law or --instance");
  BatchConfig cfg;
  cfg.trials = o.trials;
  cfg.dims = DimRange::parse(o.dims);
  cfg.master_seed = o.seed;
  cfg.tolerance = tol;
  cfg.workers = o.workers;
  const Report r = batch_verify(o.law, cfg);
  std::ostringstream s;
  s << r.law << ": " << r.violations << " violations in " << r.trials << " trials, min slack " << r.min_slack;
  emit(to_json(r), o, out, s.str());
  return r.violations > 0 ? kExitViolation : kExitOk;
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.budget = o.budget;
  cfg.restarts = o.restarts;
  cfg.dim = o.dim;
  cfg.seed = o.seed;
  cfg.p = o.p;
  cfg.workers = o.workers;
  return cfg;
}

int report_search(const SearchResult& r, const Options& o, std::ostream& out) {
  std::ostringstream s;
  s << r.target << ": " << to_string(r.verdict) << ", " << r.measure << ' ' << r.achieved << " against "
    << r.bound;
  emit(to_json(r), o, out, s.str());
  return r.verdict == SearchVerdict::CounterexampleFound ? kExitViolation : kExitOk;
}

int sharpness(const Options& o, std::ostream& out) {
  if (o.law.empty()) throw Error(ErrorCode::BadConfig, "sharpness needs --law");
  SearchConfig cfg = search_config(o);
  if (!o.instance.empty()) cfg.start = load_instance(o.instance);
  return report_search(sharpness_search(find_law(o.law), cfg), o, out);
}

int hunt(const Options& o, std::ostream& out) {
  if (o.problem.empty()) throw Error(ErrorCode::BadConfig, "hunt needs --problem");
  return report_search(counterexample_hunt(o.problem, search_config(o)), o, out);
}

int list(std::ostream& out) {
  for (const auto& law : registry()) out << law.id << "  " << law.summary << '\n';
  for (const auto& p : problem_ids()) out << p << "  (problem)\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Property-based checker for matrix inequalities", "matineq"};
  app.require_subcommand(1, 1);
  Options o;

  auto* verify_cmd = app.add_subcommand("verify", "check a law on random instances or on one instance file");
  auto* sharp_cmd = app.add_subcommand("sharpness", "search for instances that attain a law's constant");
  auto* hunt_cmd = app.add_subcommand("hunt", "search for counterexamples to a problem");
  auto* list_cmd = app.add_subcommand("list", "print law and problem ids");

  for (auto* cmd : {verify_cmd, sharp_cmd, hunt_cmd}) {
    cmd->add_option("--seed", o.seed, "master seed")->envname("MATINEQ_SEED");
    cmd->add_option("--out", o.out, "write the JSON report here instead of stdout");
    cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  }
  verify_cmd->add_option("--law", o.law, "law id");
  verify_cmd->add_option("--trials", o.trials, "number of random instances");
  verify_cmd->add_option("--dims", o.dims, "dimension range lo..hi");
  verify_cmd->add_option("--rel-tol", o.rel_tol, "relative tolerance");
  verify_cmd->add_option("--abs-tol", o.abs_tol, "absolute tolerance");
  verify_cmd->add_option("--instance", o.instance, "instance or report file to replay");

  sharp_cmd->add_option("--law", o.law, "law id")->required();
  sharp_cmd->add_option("--instance", o.instance, "starting instance");
  for (auto* cmd : {sharp_cmd, hunt_cmd}) {
    cmd->add_option("--dim", o.dim, "dimension");
    cmd->add_option("--budget", o.budget, "total evaluations");
    cmd->add_option("--restarts", o.restarts, "independent restarts");
  }
  hunt_cmd->add_option("--problem", o.problem, "problem id")->required();
  hunt_cmd->add_option("--p", o.p, "Schatten exponent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*verify_cmd) return verify(o, out, err);
    if (*sharp_cmd) return sharpness(o, out);
    if (*hunt_cmd) return hunt(o, out);
    if (*list_cmd) return list(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace matineq
