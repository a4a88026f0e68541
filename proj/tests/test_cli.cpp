#include "matineq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "matineq/instance_io.hpp"
#include "matineq/search.hpp"
#include "test_util.hpp"

using namespace matineq;
using namespace testutil;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("matineq_cli_" + name)).string();
}

Json without_timestamp(Json j) {
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_CASE("list prints every law and problem") {
  const Run r = run({"list"});
  CHECK(r.code == kExitOk);
  int lines = 0;
  std::istringstream s(r.out);
  for (std::string line; std::getline(s, line);) ++lines;
  CHECK(lines == static_cast<int>(registry().size() + problem_ids().size()));
  CHECK(r.out.find("L-KANT-VEC  ") != std::string::npos);
  CHECK(r.out.find("SCHATTEN-P-GT-2  (problem)") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"frobnicate"}).code == kExitConfig);
  CHECK(run({"verify", "--law", "L-NOPE", "--trials", "3"}).code == kExitConfig);
  CHECK(run({"verify", "--law", "L-HLP", "--dims", "5..2"}).code == kExitConfig);
  CHECK(run({"verify", "--law", "L-HLP", "--trials", "x"}).code == kExitConfig);
  CHECK(run({"sharpness", "--law", "L-HLP"}).code == kExitConfig);
  CHECK(run({"hunt", "--problem", "NOPE"}).code == kExitConfig);
  const Run bad_p = run({"hunt", "--problem", "SCHATTEN-P-GT-2", "--p", "1.5"});
  CHECK(bad_p.code == kExitConfig);
  CHECK(bad_p.err.find("error: ") == 0);
  CHECK(run({"verify", "--instance", "/nonexistent/instance.json"}).code == kExitConfig);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("batch verify writes a reproducible report") {
  const std::string a = temp_path("a.json");
  const std::string b = temp_path("b.json");
  const Run r1 = run({"verify", "--law", "L-HLP", "--trials", "200", "--dims", "2..7", "--seed", "42", "--out", a});
  CHECK(r1.code == kExitOk);
  CHECK(r1.out.find("L-HLP: 0 violations in 200 trials") == 0);
  const Run r2 = run({"verify", "--law", "L-HLP", "--trials", "200", "--dims", "2..7", "--seed", "42", "--workers",
                      "3", "--out", b});
  CHECK(r2.code == kExitOk);
  const Json ja = read_json_file(a);
  CHECK(ja.contains("timestamp"));
  CHECK(ja["violations"] == 0);
  CHECK(without_timestamp(ja).dump() == without_timestamp(read_json_file(b)).dump());

  // replaying the report checks its worst instance
  const Run replay = run({"verify", "--instance", a});
  CHECK(replay.code == kExitOk);
  const Json v = Json::parse(replay.out);
  CHECK(v["hypothesis_ok"] == true);
  CHECK(v["holds"] == true);
  const double slack = v["slack"].get<double>();
  const double worst = ja["min_slack"].get<double>();
  CHECK(std::abs(slack - worst) <= 1e-12 * std::max(1.0, std::abs(worst)));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("the seed can come from the environment") {
  const std::vector<std::string> args{"verify", "--law", "L-KANT-VEC", "--trials", "20", "--dims", "2..3"};
  ::setenv("MATINEQ_SEED", "99", 1);
  const Run env = run(args);
  ::unsetenv("MATINEQ_SEED");
  std::vector<std::string> explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "99"});
  const Run flag = run(explicit_seed);
  const Run other = run(args);
  CHECK(env.code == kExitOk);
  const Json je = Json::parse(env.out);
  CHECK(je["master_seed"] == 99);
  CHECK(without_timestamp(je) == without_timestamp(Json::parse(flag.out)));
  CHECK(without_timestamp(je) != without_timestamp(Json::parse(other.out)));
}

TEST_CASE("verify on an instance file") {
  LawInstance in;
  in.law = "L-FROB-CHEB";
  in.matrices["A"] = diag({1, 2});
  in.matrices["B"] = diag({1, 3});
  in.matrices["Z"] = real({{0, 1}, {1, 0}});
  const std::string path = temp_path("inst.json");
  save_instance(in, path);
  Run r = run({"verify", "--instance", path});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["law"] == "L-FROB-CHEB");
  CHECK(run({"verify", "--instance", path, "--law", "L-HLP"}).code == kExitConfig);

  // B no longer commutes with A
  in.matrices["B"] = real({{1, 1}, {1, 3}});
  save_instance(in, path);
  r = run({"verify", "--instance", path});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("hypothesis: ") != std::string::npos);
  CHECK(Json::parse(r.out)["hypothesis_ok"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("a counterexample exits with 1") {
  const std::string path = temp_path("hunt.json");
  const Run r = run({"hunt", "--problem", "SCHATTEN-P-GT-2", "--p", "4", "--dim", "3", "--budget", "100000", "--seed",
                     "7", "--out", path});
  CHECK(r.code == kExitViolation);
  CHECK(r.out.find("counterexample_found") != std::string::npos);
  const Json j = read_json_file(path);
  CHECK(j["verdict"] == "counterexample_found");
  CHECK(j["achieved"].get<double>() > 1.0 + 1e-8);
  // the stored instance reproduces the ratio
  const LawInstance in = instance_from_json(j["instance"]);
  CHECK(schatten_ratio(in, 4.0) == doctest::Approx(j["achieved"].get<double>()).epsilon(1e-12));
  std::filesystem::remove(path);
}

TEST_CASE("sharpness reports") {
  const Run r = run({"sharpness", "--law", "L-KANT-VEC", "--dim", "2", "--budget", "500", "--restarts", "2"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["target"] == "L-KANT-VEC");
  CHECK(j["verdict"] == "bound_nearly_attained");
  CHECK(j["open_problem"] == false);
}

TEST_CASE("installed binary") {
  const char* exe = std::getenv("MATINEQ_CLI");
  if (exe == nullptr) return;
  const std::string base = std::string("\"") + exe + "\"";
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status(base + " list") == 0);
  CHECK(status(base + " verify --law L-KANT-VEC --trials 10") == 0);
  CHECK(status(base + " verify --law L-NOPE") == 2);
  CHECK(status(base) == 2);
}
