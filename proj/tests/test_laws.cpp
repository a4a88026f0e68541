#include <set>

#include "matineq/batch.hpp"
#include "matineq/instance_io.hpp"
#include "matineq/laws.hpp"
#include "test_util.hpp"

using namespace matineq;
using namespace testutil;

namespace {

const std::vector<std::string> kExpectedIds = {
    "L-OPNORM-NORMAL", "L-CHEB-VEC",       "L-FROB-CHEB",       "L-TRACE-CHEB",        "L-VONNEUMANN",
    "L-HLP",           "L-RC",             "L-SUMSYM",          "L-PROJ-SV",           "L-DET-CHEB",
    "L-DET-CHEB-REV",  "L-GRUSS-TRACE",    "L-GRUSS-NORMAL",    "L-VARCOV",            "L-SV-KANT",
    "L-KANT-VEC",      "L-OPNORM-RHO",     "L-LOEWNER-AZA",     "L-SV-KANT-REV",       "L-SANDWICH",
    "L-SYMNORM-KANT",  "L-SYMNORM-NORMAL", "L-PINCH",           "L-COMMUTE-KANT",      "L-REV-REARR",
    "L-CASSEL",        "L-DRAGOMIR",       "L-MOND-PECARIC",    "L-ARAKI",             "L-JENSEN-P",
    "L-FURUTA-REV-JENSEN", "L-FST-OPNORM", "L-ARAKI-REV-SV",    "L-FURUTA-TRACE",      "L-FURUTA-SYMNORM",
    "L-PROJ-TRACE-POWER",  "L-ADD-REV-OPNORM", "L-FURUTA-SCALAR"};

LawInstance literal(const std::string& law) {
  LawInstance in;
  in.law = law;
  return in;
}

bool mentions(const Verdict& v, const std::string& text) {
  for (const auto& d : v.diagnostics) {
    if (d.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("registry contents") {
  std::set<std::string> ids;
  for (const auto& law : registry()) {
    CHECK(ids.insert(law.id).second);
    CHECK(static_cast<bool>(law.hypotheses));
    CHECK(static_cast<bool>(law.evaluate));
    CHECK(static_cast<bool>(law.generate));
    CHECK_FALSE(law.summary.empty());
  }
  CHECK(ids == std::set<std::string>(kExpectedIds.begin(), kExpectedIds.end()));
  CHECK(find_law("L-HLP").shape == LawShape::Sequence);
  CHECK(find_law("L-LOEWNER-AZA").mode == ComparisonMode::Loewner);
  CHECK(find_law("L-PINCH").mode == ComparisonMode::AllSymmetricNorms);
  CHECK(find_law("L-SANDWICH").mode == ComparisonMode::PerSingularValue);
  CHECK(code_of([] { find_law("L-NOPE"); }) == ErrorCode::UnknownLaw);
}

TEST_CASE("rearrangement example") {
  LawInstance in = literal("L-HLP");
  in.sequences["a"] = rvec({1, 2, 3});
  in.sequences["b"] = rvec({3, 1, 2});
  const Verdict v = check(find_law("L-HLP"), in);
  REQUIRE(v.holds.has_value());
  CHECK(*v.holds);
  REQUIRE(v.rows.size() == 2);
  // the six pairings of (1,2,3) with (3,1,2) range over [10, 14]; this one is 11
  CHECK(v.rows[0].lhs == 10.0);
  CHECK(v.rows[0].rhs == 11.0);
  CHECK(v.rows[1].lhs == 11.0);
  CHECK(v.rows[1].rhs == 14.0);
  CHECK(v.slack == 1.0);
}

TEST_CASE("Kantorovich vector equality") {
  LawInstance in = literal("L-KANT-VEC");
  in.matrices["Z"] = diag({4, 1});
  CVec h(2);
  h << std::sqrt(1.0 / 5.0), std::sqrt(4.0 / 5.0);
  in.vectors["h"] = h;
  const Verdict v = check(find_law("L-KANT-VEC"), in);
  REQUIRE(v.rows.size() == 1);
  CHECK(v.rows[0].lhs == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(v.rows[0].rhs == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(v.rows[0].factor == 1.25);
  CHECK(std::abs(v.slack) <= 1e-12);
  CHECK(*v.holds);
}

TEST_CASE("projection case of the singular value Kantorovich law") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.integer(2, 6);
    const LawInstance base = random_instance("L-PROJ-SV", n, rng.next());
    LawInstance kant = literal("L-SV-KANT");
    kant.matrices["A"] = base.mat("A");
    kant.matrices["B"] = base.mat("B");
    kant.matrices["Z"] = base.mat("E");
    if (support_projection(base.mat("E")).rank() == 0) continue;
    const Verdict pv = check(find_law("L-PROJ-SV"), base);
    const Verdict kv = check(find_law("L-SV-KANT"), kant);
    REQUIRE(pv.rows.size() == kv.rows.size());
    for (std::size_t j = 0; j < pv.rows.size(); ++j) {
      CHECK(kv.rows[j].factor == 1.0);
      CHECK(kv.rows[j].lhs == pv.rows[j].lhs);
      CHECK(kv.rows[j].rhs == pv.rows[j].rhs);
    }
    CHECK(kv.holds == pv.holds);
  }
}

TEST_CASE("random instances are deterministic and respect dimensions") {
  for (const auto& law : registry()) {
    const int n = std::max(law.min_dim, 3);
    const LawInstance a = random_instance(law, n, 77);
    const LawInstance b = random_instance(law, n, 77);
    CHECK(instance_to_json(a) == instance_to_json(b));
    CHECK(a.provenance.kind == Provenance::Kind::Generated);
    CHECK(a.provenance.seed == 77);
    CHECK(a.dim() == n);
  }
  CHECK(code_of([] { random_instance("L-DET-CHEB-REV", 1, 0); }) == ErrorCode::UnsupportedDim);
  CHECK(code_of([] { random_instance("L-HLP", 0, 0); }) == ErrorCode::UnsupportedDim);
  CHECK(code_of([] { random_instance("L-HLP", 65, 0); }) == ErrorCode::UnsupportedDim);
}

TEST_CASE("generated instances pass their hypotheses") {
  const LawInstance frob = random_instance("L-FROB-CHEB", 4, 5);
  const Verdict v = check(find_law("L-FROB-CHEB"), frob);
  CHECK(v.hypothesis_ok);
  const LawInstance rr = random_instance("L-REV-REARR", 5, 5);
  const RVec ratio = rr.seq("a").cwiseQuotient(rr.seq("b"));
  CHECK(rr.scalar("p") == ratio.maxCoeff());
  CHECK(rr.scalar("q") == ratio.minCoeff());
}

TEST_CASE("every law holds on a small soak") {
  for (const auto& law : registry()) {
    BatchConfig cfg;
    cfg.trials = 150;
    cfg.dims = law.shape == LawShape::Sequence ? DimRange{2, 8} : DimRange{std::max(2, law.min_dim), 5};
    cfg.master_seed = 2024;
    const Report r = batch_verify(law, cfg);
    INFO(law.id);
    CHECK(r.violations == 0);
    CHECK(r.hypothesis_failures == 0);
    CHECK(r.worst_instance.has_value());
  }
}

TEST_CASE("hypothesis checkers reject broken operands") {
  SUBCASE("non-normal Z") {
    LawInstance in = random_instance("L-FROB-CHEB", 3, 1);
    in.matrices["Z"] = real({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const Verdict v = check(find_law("L-FROB-CHEB"), in);
    CHECK_FALSE(v.hypothesis_ok);
    CHECK_FALSE(v.holds.has_value());
    CHECK(mentions(v, "HypothesisNotMet"));
    CHECK(mentions(v, "Z is not normal"));
  }
  SUBCASE("pair that is not monotone") {
    LawInstance in = literal("L-CHEB-VEC");
    in.matrices["A"] = diag({1, 2, 3});
    in.matrices["B"] = diag({1, 3, 2});
    in.vectors["h"] = CVec::Ones(3) / std::sqrt(3.0);
    const Verdict v = check(find_law("L-CHEB-VEC"), in);
    CHECK_FALSE(v.hypothesis_ok);
    CHECK(mentions(v, "neither monotone nor antimonotone"));
  }
  SUBCASE("non-commuting pair") {
    LawInstance in = literal("L-FROB-CHEB");
    in.matrices["A"] = real({{1, 1}, {1, 1}});
    in.matrices["B"] = diag({1, 2});
    in.matrices["Z"] = Mat::Identity(2, 2);
    const Verdict v = check(find_law("L-FROB-CHEB"), in);
    CHECK_FALSE(v.hypothesis_ok);
  }
  SUBCASE("indefinite Z for Kantorovich laws") {
    for (const char* id : {"L-SV-KANT", "L-KANT-VEC", "L-OPNORM-RHO", "L-SANDWICH", "L-SV-KANT-REV"}) {
      LawInstance in = random_instance(id, 3, 9);
      in.matrices["Z"] = diag({2, 1, -0.5});
      const Verdict v = check(find_law(id), in);
      INFO(id);
      CHECK_FALSE(v.hypothesis_ok);
      CHECK(mentions(v, "Z is not positive"));
    }
  }
  SUBCASE("shape mismatch") {
    LawInstance in = random_instance("L-SV-KANT", 3, 2);
    in.matrices.erase("Z");
    CHECK(code_of([&] { check(find_law("L-SV-KANT"), in); }) == ErrorCode::ShapeMismatch);
    LawInstance bad = random_instance("L-SV-KANT", 3, 2);
    bad.matrices["Z"] = Mat::Identity(4, 4);
    CHECK(code_of([&] { check(find_law("L-SV-KANT"), bad); }) == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("unitarily invariant laws are invariant under conjugation") {
  const std::vector<std::string> ids = {"L-PROJ-SV",      "L-SV-KANT",        "L-SV-KANT-REV", "L-SANDWICH",
                                        "L-ARAKI-REV-SV", "L-SYMNORM-KANT",   "L-SYMNORM-NORMAL",
                                        "L-COMMUTE-KANT", "L-ARAKI",          "L-FURUTA-SYMNORM"};
  Rng rng(4);
  for (const auto& id : ids) {
    const LawDefinition& law = find_law(id);
    for (int t = 0; t < 20; ++t) {
      const int n = rng.integer(2, 5);
      const LawInstance in = random_instance(law, n, rng.next());
      LawInstance moved = in;
      const Mat u = haar_unitary(n, rng);
      for (auto& [role, m] : moved.matrices) m = u * m * u.adjoint();
      for (auto& [role, m] : moved.matrices) {
        if (is_hermitian(m, 1e-9)) m = hermitian_part(m);
      }
      const Verdict a = check(law, in);
      const Verdict b = check(law, moved);
      INFO(id);
      REQUIRE(a.hypothesis_ok);
      REQUIRE(b.hypothesis_ok);
      double scale = 1.0;
      for (const auto& r : a.rows) scale = std::max({scale, std::abs(r.lhs), std::abs(r.rhs)});
      CHECK(std::abs(a.slack - b.slack) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("Araki reverse at p = 2 matches the sandwich law") {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.integer(2, 5);
    const LawInstance ar = [&] {
      LawInstance in = random_instance("L-ARAKI-REV-SV", n, rng.next());
      in.scalars["p"] = 2.0;
      return in;
    }();
    LawInstance sw = literal("L-SANDWICH");
    sw.matrices["A"] = hermitian_part(ar.mat("A") * ar.mat("A"));
    sw.matrices["Z"] = ar.mat("Z");
    const Verdict va = check(find_law("L-ARAKI-REV-SV"), ar);
    const Verdict vs = check(find_law("L-SANDWICH"), sw);
    REQUIRE(va.rows.size() == vs.rows.size());
    for (std::size_t j = 0; j < va.rows.size(); ++j) {
      const auto& ra = va.rows[j];
      const auto& rs = vs.rows[j];
      CHECK(ra.label == rs.label);
      CHECK(ra.factor == doctest::Approx(rs.factor * rs.factor).epsilon(1e-12));
      const double scale = std::max(1.0, rs.rhs * rs.rhs);
      CHECK(std::abs(ra.lhs - rs.lhs * rs.lhs) <= 1e-9 * scale);
      CHECK(std::abs(ra.rhs - rs.rhs * rs.rhs) <= 1e-9 * scale);
    }
    CHECK(va.holds == vs.holds);
  }
}

TEST_CASE("tolerance policy") {
  const TolerancePolicy tol;
  CHECK(tol.row_holds({"x", 1.0, 1.0, 1.0}));
  CHECK(tol.row_holds({"x", 1.0 + 5e-10, 1.0, 1.0}));
  CHECK_FALSE(tol.row_holds({"x", 1.0 + 5e-9, 1.0, 1.0}));
  CHECK(tol.row_holds({"x", 5e-13, 0.0, 1.0}));
  CHECK(code_of([] { TolerancePolicy{-1.0, 0.0}.validate(); }) == ErrorCode::BadConfig);
}

TEST_CASE("batch reports") {
  CHECK(split_trials(10, DimRange{2, 4}) == std::vector<int>{4, 3, 3});
  CHECK(DimRange::parse("2..7").count() == 6);
  CHECK(DimRange::parse("3").count() == 1);
  CHECK(code_of([] { DimRange::parse("7..2"); }) == ErrorCode::BadConfig);
  CHECK(code_of([] { DimRange::parse("a..b"); }) == ErrorCode::BadConfig);

  BatchConfig cfg;
  cfg.trials = 200;
  cfg.dims = DimRange{2, 4};
  cfg.master_seed = 99;
  cfg.workers = 1;
  const Json one = to_json(batch_verify("L-SANDWICH", cfg));
  cfg.workers = 4;
  const Json four = to_json(batch_verify("L-SANDWICH", cfg));
  CHECK(one == four);
  CHECK(one["tolerance"]["rel"] == 1e-9);
  CHECK(one["worst_instance"]["provenance"] == "generated");

  // replaying the worst instance reproduces its slack
  const LawInstance worst = instance_from_json(one);
  CHECK(check(find_law("L-SANDWICH"), worst).slack == one["worst_instance"]["slack"].get<double>());

  cfg.trials = 0;
  CHECK(code_of([&] { batch_verify("L-SANDWICH", cfg); }) == ErrorCode::BadConfig);
  cfg.trials = 5;
  cfg.dims = DimRange{1, 3};
  CHECK(code_of([&] { batch_verify("L-DET-CHEB-REV", cfg); }) == ErrorCode::UnsupportedDim);
}

TEST_CASE("violations are counted when a hypothesis checker is disabled") {
  LawDefinition broken = find_law("L-FROB-CHEB");
  broken.generate = [](int n, Rng& rng) {
    LawInstance in = literal("L-FROB-CHEB");
    const auto pair = gen_monotone_pair(GeneratorSpec{n, rng.next(), 0.0, 2.0, std::nullopt}, Orientation::Monotone);
    in.matrices["A"] = pair.a();
    in.matrices["B"] = pair.b();
    in.matrices["Z"] = ginibre(n, n, rng);
    return in;
  };
  BatchConfig cfg;
  cfg.trials = 300;
  cfg.dims = DimRange{2, 4};
  cfg.master_seed = 5;
  cfg.options.skip_hypotheses = true;
  const Report r = batch_verify(broken, cfg);
  CHECK(r.violations > 0);
  CHECK(r.hypothesis_failures == r.trials);
  REQUIRE_FALSE(r.violating.empty());
  const InstanceKey& key = r.violating.front();
  const Verdict replay = check(broken, random_instance(broken, key.dim, key.seed), {}, cfg.options);
  CHECK(replay.violated());
  CHECK(replay.slack == key.slack);
  CHECK(r.min_slack < 0.0);

  cfg.options.skip_hypotheses = false;
  const Report guarded = batch_verify(broken, cfg);
  CHECK(guarded.violations == 0);
  CHECK(guarded.hypothesis_failures == guarded.trials);
}

TEST_CASE("instance files") {
  const std::string path = "test_laws_instance.json";
  for (const char* id : {"L-SV-KANT", "L-MOND-PECARIC", "L-CASSEL", "L-ARAKI", "L-KANT-VEC"}) {
    const LawInstance a = random_instance(id, 3, 12);
    save_instance(a, path);
    const LawInstance b = load_instance(path);
    CHECK(b.law == a.law);
    CHECK(b.matrices == a.matrices);
    CHECK(b.vectors == a.vectors);
    CHECK(b.sequences == a.sequences);
    CHECK(b.scalars == a.scalars);
  }
  std::remove(path.c_str());

  Json nonsquare = instance_to_json(random_instance("L-SV-KANT", 2, 1));
  nonsquare["matrices"]["Z"]["entries"][0].push_back(Json::array({0.0, 0.0}));
  CHECK(code_of([&] { instance_from_json(nonsquare); }) == ErrorCode::ParseError);

  Json missing = instance_to_json(random_instance("L-SV-KANT", 2, 1));
  missing["matrices"].erase("Z");
  CHECK(code_of([&] { instance_from_json(missing); }) == ErrorCode::ShapeMismatch);

  CHECK(code_of([] { instance_from_json(Json::parse("[1, 2]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_instance("/nonexistent/instance.json"); }) == ErrorCode::ParseError);

  const Json ref = {{"law", "L-HLP"}, {"provenance", "generated"}, {"dim", 4}, {"seed", 8}};
  CHECK(instance_from_json(ref).sequences == random_instance("L-HLP", 4, 8).sequences);
}
