#include "law_support.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace matineq::detail {

LawInstance blank_instance(const std::string& law) {
  LawInstance inst;
  inst.law = law;
  return inst;
}

Mat draw_psd(Index n, Rng& rng, double lo, double hi, bool allow_singular) {
  const Mat u = haar_unitary(n, rng);
  RVec s(n);
  for (Index i = 0; i < n; ++i) s(i) = rng.uniform(lo, hi);
  if (n >= 2 && rng.chance(0.15)) {
    const auto i = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
    s(j) = s(i);
  }
  if (allow_singular && n >= 2 && rng.chance(0.2)) {
    const auto zeros = static_cast<Index>(rng.integer(1, static_cast<int>(n - 1)));
    for (Index i = 0; i < zeros; ++i) s(i) = 0.0;
  }
  return PsdMatrix::from_spectrum(u, s).mat();
}

Mat draw_hermitian(Index n, Rng& rng, double lo, double hi) {
  const Mat u = haar_unitary(n, rng);
  RVec s(n);
  for (Index i = 0; i < n; ++i) s(i) = rng.uniform(lo, hi);
  return hermitian_part(u * s.cast<Complex>().asDiagonal() * u.adjoint());
}

Mat draw_normal(Index n, Rng& rng, double radius) {
  GeneratorSpec spec;
  spec.dim = static_cast<int>(n);
  spec.seed = rng.next();
  spec.lo = -radius;
  spec.hi = radius;
  return gen_normal(spec, rng.chance(0.2) ? SpectrumKind::Real : SpectrumKind::Complex);
}

Mat draw_general(Index n, Rng& rng) { return ginibre(n, n, rng) * std::sqrt(0.5); }

Mat draw_invertible(Index n, Rng& rng, double lo, double hi) {
  const Mat u = haar_unitary(n, rng);
  const Mat v = haar_unitary(n, rng);
  RVec s(n);
  for (Index i = 0; i < n; ++i) s(i) = rng.uniform(lo, hi);
  return u * s.cast<Complex>().asDiagonal() * v.adjoint();
}

Orientation draw_orientation(Rng& rng) {
  return rng.chance(0.5) ? Orientation::Monotone : Orientation::Antimonotone;
}

MonotonePair draw_pair(Index n, Rng& rng, Orientation orientation, double lo, double hi) {
  GeneratorSpec spec;
  spec.dim = static_cast<int>(n);
  spec.seed = rng.next();
  spec.lo = lo;
  spec.hi = hi;
  MonotonePair pair = gen_monotone_pair(spec, orientation);
  if (n >= 2 && rng.chance(0.15)) {
    // tie two neighbouring a-values; B stays free inside the merged eigenspace
    const auto i = static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
    pair.a_values(i + 1) = pair.a_values(i);
  }
  return pair;
}

CVec draw_unit(Index n, Rng& rng) { return random_unit_vector(n, rng); }

Mat draw_frame(Index n, Rng& rng, Index kmin, Index kmax) {
  const auto k = static_cast<Index>(rng.integer(static_cast<int>(kmin), static_cast<int>(kmax)));
  return random_frame(n, k, rng);
}

Mat draw_projection(Index n, Rng& rng) {
  const Mat f = draw_frame(n, rng, 0, n);
  return hermitian_part(f * f.adjoint());
}

CVec kantorovich_vector(const Mat& z) {
  const auto sd = spectral_decompose(HermitianMatrix(z));
  const Index n = sd.eigenvalues.size();
  if (n == 1) return sd.eigenvectors.col(0);
  const double a = sd.eigenvalues(0);
  const double b = sd.eigenvalues(n - 1);
  return std::sqrt(b / (a + b)) * sd.eigenvectors.col(0) +
         std::sqrt(a / (a + b)) * sd.eigenvectors.col(n - 1);
}

bool require_hermitian(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  const bool ok = is_hermitian(inst.mat(role));
  hyp.require(ok, role + " is not Hermitian");
  return ok;
}

bool require_psd(const LawInstance& inst, Hypotheses& hyp, const std::string& role, bool strict) {
  try {
    PsdMatrix(inst.mat(role), strict);
    return true;
  } catch (const Error& e) {
    hyp.require(false, role + (strict ? " is not positive definite" : " is not positive semidefinite") +
                           " (" + e.what() + ")");
    return false;
  }
}

bool require_normal(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  const bool ok = is_normal(inst.mat(role));
  hyp.require(ok, role + " is not normal");
  return ok;
}

bool require_projection(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  try {
    Projection p(inst.mat(role));
    return true;
  } catch (const Error& e) {
    hyp.require(false, role + " is not a projection (" + e.what() + ")");
    return false;
  }
}

bool require_unit(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  try {
    UnitVector u(inst.vec(role));
    return true;
  } catch (const Error& e) {
    hyp.require(false, role + " is not a unit vector (" + e.what() + ")");
    return false;
  }
}

bool require_frame(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  const Mat& f = inst.mat(role);
  const bool ok = f.cols() >= 1 && is_orthonormal_frame(f);
  hyp.require(ok, role + " is not an orthonormal frame");
  return ok;
}

bool require_nonnegative_matrix(const LawInstance& inst, Hypotheses& hyp, const std::string& role) {
  const Mat& x = inst.mat(role);
  const bool real = x.imag().cwiseAbs().maxCoeff() == 0.0;
  const bool nonneg = x.real().minCoeff() >= 0.0;
  hyp.require(real && nonneg, role + " is not a real nonnegative matrix");
  return real && nonneg;
}

bool require_positive_sequence(const LawInstance& inst, Hypotheses& hyp, const std::string& role,
                               bool strict) {
  const RVec& v = inst.seq(role);
  const double lo = v.minCoeff();
  const bool ok = strict ? lo > 0.0 : lo >= 0.0;
  hyp.require(ok, role + (strict ? " has a nonpositive entry" : " has a negative entry"));
  return ok;
}

std::optional<Orientation> require_pair(const LawInstance& inst, Hypotheses& hyp,
                                        const std::string& a, const std::string& b,
                                        std::optional<Orientation> wanted) {
  if (!require_hermitian(inst, hyp, a) || !require_hermitian(inst, hyp, b)) return std::nullopt;
  const auto o = recognize_monotone_pair(inst.mat(a), inst.mat(b));
  if (!o) {
    hyp.require(false, "(" + a + ", " + b + ") is neither monotone nor antimonotone");
    return std::nullopt;
  }
  if (wanted && !satisfies(*o, *wanted)) {
    hyp.require(false, "(" + a + ", " + b + ") is " + std::string(to_string(*o)) + ", need " +
                           std::string(to_string(*wanted)));
    return std::nullopt;
  }
  return o;
}

Orientation pair_orientation(const LawInstance& inst, const std::string& a, const std::string& b) {
  const auto o = recognize_monotone_pair(inst.mat(a), inst.mat(b));
  if (!o) throw Error(ErrorCode::BadConfig, "pair orientation requested for an unordered pair");
  return *o;
}

bool require_spectral_bounds(const LawInstance& inst, Hypotheses& hyp, const std::string& role,
                             const std::string& upper, const std::string& lower) {
  const double p = inst.scalar(upper);
  const double q = inst.scalar(lower);
  if (!(p >= q)) {
    hyp.require(false, upper + " < " + lower);
    return false;
  }
  const RVec ev = hermitian_eigenvalues(inst.mat(role));
  const double tol = 1e-9 * std::max({1.0, std::abs(p), std::abs(q)});
  const bool ok = ev(0) <= p + tol && ev(ev.size() - 1) >= q - tol;
  hyp.require(ok, "spectrum of " + role + " is not inside [" + lower + ", " + upper + "]");
  return ok;
}

void store_extremes(LawInstance& inst, const std::string& role, const std::string& upper,
                    const std::string& lower) {
  const RVec ev = hermitian_eigenvalues(inst.mat(role));
  inst.scalars[upper] = ev(0);
  inst.scalars[lower] = ev(ev.size() - 1);
}

Mat psd_pow(const Mat& m, double p) {
  const PsdMatrix a(hermitian_part(m));
  if (p > 0.0 && p < 1.0) {
    const RVec& ev = a.spectrum().eigenvalues;
    RVec cleaned = ev;
    const double cut = kDefaultTolerances.rank * std::max(ev(0), 0.0);
    for (Index i = 0; i < cleaned.size(); ++i) {
      cleaned(i) = cleaned(i) <= cut ? 0.0 : std::pow(cleaned(i), p);
    }
    return PsdMatrix::from_spectrum(a.spectrum().eigenvectors, cleaned).mat();
  }
  return matrix_power(a, p).mat();
}

Mat psd_sqrt(const Mat& m) { return psd_pow(m, 0.5); }

std::pair<double, double> extremes(const Mat& z, bool nonzero_only) {
  return extremal_eigenvalues(PsdMatrix(z), nonzero_only);
}

RVec svals(const Mat& x) { return singular_values(x).values; }

double trace_norm(const Mat& x) { return svals(x).sum(); }

void add_profile_rows(Evaluation& ev, const std::string& prefix, const RVec& lhs, const RVec& rhs,
                      double factor) {
  for (Index j = 0; j < lhs.size(); ++j) {
    ev.add(prefix + "_" + std::to_string(j + 1), lhs(j), factor * rhs(j), factor);
  }
}

void add_kyfan_rows(Evaluation& ev, const Mat& x, const Mat& y, double factor) {
  add_profile_rows(ev, "kyfan", ky_fan_profile(x), ky_fan_profile(y), factor);
}

void add_loewner_row(Evaluation& ev, const std::string& label, const Mat& l, const Mat& r,
                     double factor) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(r - l));
  const CVec h = es.eigenvectors().col(0);
  ev.add(label, inner(h, l * h).real(), inner(h, r * h).real(), factor);
}

}  // namespace matineq::detail
