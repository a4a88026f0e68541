#include "matineq/norms.hpp"

#include "test_util.hpp"

using namespace matineq;
using namespace testutil;

namespace {

std::vector<NormId> sample_ids(int n) {
  std::vector<NormId> ids{NormId::operator_norm(), NormId::frobenius(), NormId::trace(), NormId::schatten(1.5),
                          NormId::schatten(3.0)};
  for (int k = 1; k <= n; ++k) ids.push_back(NormId::ky_fan(k));
  return ids;
}

}  // namespace

TEST_CASE("norm values on small matrices") {
  CHECK(norm(diag({1, -2}), NormId::trace()) == doctest::Approx(3));
  CHECK(norm(diag({3, 2, 1}), NormId::ky_fan(2)) == doctest::Approx(5));
  CHECK(norm(diag({3, 4}), NormId::frobenius()) == doctest::Approx(5));
  CHECK(norm(diag({3, -4}), NormId::operator_norm()) == doctest::Approx(4));
  // (3^3 + 4^3)^(1/3)
  CHECK(norm(diag({3, -4}), NormId::schatten(3)) == doctest::Approx(std::cbrt(91.0)).epsilon(1e-14));
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const Mat x = ginibre(4, 4, rng);
    CHECK(norm(x, NormId::schatten(2)) == doctest::Approx(norm(x, NormId::frobenius())).epsilon(1e-13));
  }
}

TEST_CASE("Ky Fan k range is enforced") {
  CHECK(code_of([] { norm(diag({1, 2}), NormId::ky_fan(3)); }) == ErrorCode::KOutOfRange);
  CHECK(code_of([] { NormId::ky_fan(0); }) == ErrorCode::BadNormId);
  CHECK(code_of([] { NormId::schatten(0.5); }) == ErrorCode::BadNormId);
}

TEST_CASE("NormId text form round-trips") {
  for (const char* s : {"operator", "frobenius", "trace", "schatten:2.5", "kyfan:3"}) {
    CHECK(NormId::parse(s).to_string() == s);
  }
  CHECK(NormId::parse("kyfan:2") == NormId::ky_fan(2));
  CHECK(code_of([] { NormId::parse("spectral"); }) == ErrorCode::BadNormId);
  CHECK(code_of([] { NormId::parse("kyfan:x"); }) == ErrorCode::BadNormId);
}

TEST_CASE("Ky Fan profiles") {
  const RVec p = ky_fan_profile(diag({2, 0}));
  CHECK(p(0) == doctest::Approx(2));
  CHECK(p(1) == doctest::Approx(2));
  const RVec i = ky_fan_profile(Mat::Identity(3, 3));
  CHECK(i(0) == doctest::Approx(1));
  CHECK(i(1) == doctest::Approx(2));
  CHECK(i(2) == doctest::Approx(3));
  CHECK(ky_fan_profile(Mat::Zero(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Ky Fan endpoints agree with operator and trace norms exactly") {
  Rng rng(2);
  for (int n = 2; n <= 10; ++n) {
    const Mat x = ginibre(n, n, rng);
    CHECK(norm(x, NormId::ky_fan(1)) == norm(x, NormId::operator_norm()));
    CHECK(norm(x, NormId::ky_fan(n)) == norm(x, NormId::trace()));
  }
}

TEST_CASE("norm axioms and unitary invariance") {
  Rng rng(3);
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const Mat x = ginibre(n, n, rng);
      const Mat y = ginibre(n, n, rng);
      const Mat u = haar_unitary(n, rng);
      const Mat v = haar_unitary(n, rng);
      const Complex c(rng.normal(), rng.normal());
      for (const auto& id : sample_ids(n)) {
        const double nx = norm(x, id);
        const double ny = norm(y, id);
        const double scale = std::max({1.0, nx, ny});
        CHECK(norm(Mat(x + y), id) <= nx + ny + 1e-9 * scale);
        CHECK(std::abs(norm(Mat(c * x), id) - std::abs(c) * nx) <= 1e-9 * std::max(1.0, std::abs(c) * nx));
        CHECK(std::abs(norm(Mat(u * x * v), id) - nx) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("dominance examples") {
  const Mat ones = real({{1, 1}, {1, 1}});
  const auto pinched = dominates_all_symmetric_norms(diag_pinch(ones), ones, 1.0);
  CHECK(pinched.holds);
  CHECK(pinched.slacks(0) == doctest::Approx(1));
  CHECK(std::abs(pinched.slacks(1)) < 1e-14);

  Rng rng(4);
  const Mat x = ginibre(3, 3, rng);
  const auto same = dominates_all_symmetric_norms(x, x, 1.0);
  CHECK(same.holds);
  CHECK(same.slacks.cwiseAbs().maxCoeff() == 0.0);

  const auto fails = dominates_all_symmetric_norms(diag({2, 0}), diag({1, 1}), 1.0);
  CHECK_FALSE(fails.holds);
  CHECK(fails.slacks(0) == doctest::Approx(-1));
  CHECK(fails.slacks(1) == doctest::Approx(0));

  CHECK(code_of([] { dominates_all_symmetric_norms(diag({1, 2}), diag({1, 2, 3}), 1.0); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("dominance implies Schatten comparisons") {
  Rng rng(5);
  int found = 0;
  while (found < 200) {
    const int n = rng.integer(2, 5);
    const Mat y = ginibre(n, n, rng);
    // pinchings and unitary mixtures of Y are dominated by Y
    const Mat x = rng.chance(0.5) ? Mat(haar_unitary(n, rng) * diag_pinch(y) * haar_unitary(n, rng))
                                  : Mat(0.5 * (y + haar_unitary(n, rng) * y * haar_unitary(n, rng)));
    if (!dominates_all_symmetric_norms(x, y, 1.0).holds) continue;
    ++found;
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
      const double nx = norm(x, NormId::schatten(p));
      const double ny = norm(y, NormId::schatten(p));
      CHECK(nx <= ny + 1e-8 * std::max({1.0, nx, ny}));
    }
  }
}

TEST_CASE("pinching never increases a symmetric norm") {
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.integer(2, 6);
    const Mat x = ginibre(n, n, rng);
    CHECK(dominates_all_symmetric_norms(diag_pinch(x), x, 1.0).holds);
  }
}
