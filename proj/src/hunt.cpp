#include <algorithm>
#include <cmath>
#include <limits>

#include "matineq/norms.hpp"
#include "matineq/search.hpp"
#include "matineq/structure.hpp"
#include "parallel.hpp"

namespace matineq {

std::vector<std::string> problem_ids() {
  return {std::string(kSchattenAbove2), std::string(kSchattenBelow2), std::string(kDetAllSubspaces)};
}

double schatten_ratio(const LawInstance& inst, double p) {
  const Mat& a = inst.mat("A");
  const Mat& b = inst.mat("B");
  const Mat& z = inst.mat("Z");
  const NormId id = NormId::schatten(p);
  return norm(Mat(a * z * b), id) / norm(Mat(z * a * b), id);
}

namespace {

Mat diag(const RVec& v) { return v.cast<Complex>().asDiagonal(); }

RVec nonneg_sorted(RVec v) {
  v = v.cwiseAbs();
  const double top = v.maxCoeff();
  if (top > 0.0) v /= top;
  std::sort(v.begin(), v.end());
  return v;
}

// ---- Schatten hunts --------------------------------------------------------

// A = diag(a), B = diag(b) with a, b ascending (a monotone pair) and
// Z = V diag(z) V*. Every quantity is scale invariant, so a and b are kept
// normalized to max 1.
struct SchattenState {
  RVec a, b;
  CVec z;
  Mat v;

  LawInstance instance(double p) const {
    LawInstance in;
    in.law = "L-FROB-CHEB";
    in.matrices["A"] = diag(a);
    in.matrices["B"] = diag(b);
    in.matrices["Z"] = v * z.asDiagonal() * v.adjoint();
    in.scalars["p"] = p;
    return in;
  }
};

struct Best {
  bool found = false;
  double score = -std::numeric_limits<double>::infinity();
  LawInstance inst;
  long evaluations = 0;
};

double score_or_nan(const LawInstance& in, double p) {
  const double r = schatten_ratio(in, p);
  return std::isfinite(r) ? r : std::numeric_limits<double>::quiet_NaN();
}

Best schatten_branch(const SearchConfig& cfg, std::size_t index, long budget) {
  Rng rng(derive_seed(cfg.seed, index));
  const Index n = cfg.dim;
  SchattenState cur{nonneg_sorted(RVec::NullaryExpr(n, [&] { return rng.normal(); })),
                    nonneg_sorted(RVec::NullaryExpr(n, [&] { return rng.normal(); })),
                    CVec::NullaryExpr(n, [&] { return Complex(rng.normal(), rng.normal()); }),
                    haar_unitary(n, rng)};
  Best best;
  double score = score_or_nan(cur.instance(cfg.p), cfg.p);
  best.evaluations = 1;
  double step = cfg.step_scale;
  while (best.evaluations < budget) {
    SchattenState next = cur;
    next.a = nonneg_sorted(next.a + step * RVec::NullaryExpr(n, [&] { return rng.normal(); }));
    next.b = nonneg_sorted(next.b + step * RVec::NullaryExpr(n, [&] { return rng.normal(); }));
    next.z += step * CVec::NullaryExpr(n, [&] { return Complex(rng.normal(), rng.normal()); });
    next.v = unitary_exp(random_hermitian_direction(n, rng), step) * next.v;
    const double s = score_or_nan(next.instance(cfg.p), cfg.p);
    ++best.evaluations;
    if (s > score || std::isnan(score)) {
      cur = std::move(next);
      score = s;
      step = std::min(step * 1.1, 1.0);
    } else {
      step = std::max(step * 0.99, 1e-9);
    }
  }
  if (!std::isnan(score)) {
    best.found = true;
    best.score = score;
    best.inst = cur.instance(cfg.p);
  }
  return best;
}

SearchResult schatten_hunt(std::string_view problem, const SearchConfig& cfg) {
  const bool above = problem == kSchattenAbove2;
  if (!std::isfinite(cfg.p)) throw Error(ErrorCode::BadConfig, "p must be finite");
  if (above ? !(cfg.p > 2.0) : !(cfg.p >= 1.0 && cfg.p < 2.0)) {
    throw Error(ErrorCode::BadConfig, std::string(problem) + (above ? " needs p > 2" : " needs 1 <= p < 2"));
  }
  if (cfg.dim < 2) throw Error(ErrorCode::BadConfig, "Schatten hunts need dim >= 2");
  const long per = std::max<long>(1, cfg.budget / cfg.restarts);
  const auto branches = detail::parallel_map<Best>(static_cast<std::size_t>(cfg.restarts), cfg.workers,
                                                   [&](std::size_t i) { return schatten_branch(cfg, i, per); });
  SearchResult res;
  res.target = std::string(problem);
  res.open_problem = !above;
  res.bound = 1.0;
  const Best* best = nullptr;
  for (const auto& b : branches) {
    res.evaluations += b.evaluations;
    if (b.found && (!best || b.score > best->score)) best = &b;
  }
  if (!best) {
    res.note = "every evaluation was degenerate";
    return res;
  }
  res.achieved = best->score;
  res.instance = best->inst;
  const LawInstance& in = best->inst;
  const auto o = recognize_monotone_pair(in.mat("A"), in.mat("B"));
  const bool valid = o && satisfies(*o, Orientation::Monotone) && is_normal(in.mat("Z")) &&
                     hermitian_eigenvalues(in.mat("A")).minCoeff() >= 0.0 &&
                     hermitian_eigenvalues(in.mat("B")).minCoeff() >= 0.0;
  if (valid && schatten_ratio(in, cfg.p) > 1.0 + 1e-8) {
    res.verdict = SearchVerdict::CounterexampleFound;
    res.note = "||AZB||_p > ||ZAB||_p for a monotone pair A, B >= 0 and normal Z";
  } else {
    res.note = above ? "no violation found within the budget"
                     : "open question: no violation found, which is evidence only";
  }
  return res;
}

// ---- determinant hunt ------------------------------------------------------

double det_slack(const Mat& a, const Mat& b, const Mat& frame) {
  const double da = compression(a, frame).determinant().real();
  const double db = compression(b, frame).determinant().real();
  const double dab = compression(Mat(a * b), frame).determinant().real();
  return (da * db - dab) / std::max({1.0, std::abs(da * db), std::abs(dab)});
}

struct DetBest {
  double slack = std::numeric_limits<double>::infinity();
  LawInstance inst;
  long evaluations = 0;
};

// Restart r works in dimension 3 + r % 3; the subspace dimension cycles
// through 1..n-1 as r grows.
DetBest det_branch(const SearchConfig& cfg, std::size_t index, long budget) {
  Rng rng(derive_seed(cfg.seed, index));
  const Index n = 3 + static_cast<Index>(index % 3);
  const Index k = 1 + static_cast<Index>((index / 3) % static_cast<std::size_t>(n - 1));
  auto draw_values = [&](const RVec& base, double step) {
    RVec v = base + step * RVec::NullaryExpr(n, [&] { return rng.normal(); });
    return nonneg_sorted(v);
  };
  RVec a = draw_values(RVec::Zero(n), 1.0);
  RVec b = draw_values(RVec::Zero(n), 1.0);
  Mat frame = random_frame(n, k, rng);
  auto eval = [&](const RVec& x, const RVec& y, const Mat& f) {
    return det_slack(diag(x), diag(sort_rearrange(y, SortDirection::Down)), f);
  };
  DetBest best;
  double score = eval(a, b, frame);
  best.evaluations = 1;
  double step = cfg.step_scale;
  while (best.evaluations < budget) {
    const RVec na = draw_values(a, step);
    const RVec nb = draw_values(b, step);
    Mat nf = unitary_exp(random_hermitian_direction(n, rng), step) * frame;
    nf = Eigen::HouseholderQR<Mat>(nf).householderQ() * Mat::Identity(n, k);
    const double s = eval(na, nb, nf);
    ++best.evaluations;
    if (s < score) {
      a = na;
      b = nb;
      frame = nf;
      score = s;
      step = std::min(step * 1.1, 1.0);
    } else {
      step = std::max(step * 0.99, 1e-9);
    }
  }
  best.slack = score;
  best.inst.law = "L-DET-CHEB-REV";
  best.inst.matrices["A"] = diag(a);
  best.inst.matrices["B"] = diag(sort_rearrange(b, SortDirection::Down));
  best.inst.matrices["E"] = frame;
  return best;
}

SearchResult det_hunt(const SearchConfig& cfg) {
  const long per = std::max<long>(1, cfg.budget / cfg.restarts);
  const auto branches = detail::parallel_map<DetBest>(static_cast<std::size_t>(cfg.restarts), cfg.workers,
                                                      [&](std::size_t i) { return det_branch(cfg, i, per); });
  SearchResult res;
  res.target = std::string(kDetAllSubspaces);
  res.measure = "slack";
  res.open_problem = true;
  res.bound = 0.0;
  const DetBest* best = nullptr;
  for (const auto& b : branches) {
    res.evaluations += b.evaluations;
    if (!best || b.slack < best->slack) best = &b;
  }
  res.achieved = best->slack;
  res.instance = best->inst;
  const LawInstance& in = best->inst;
  const auto o = recognize_monotone_pair(in.mat("A"), in.mat("B"));
  const bool valid = o && satisfies(*o, Orientation::Antimonotone) && is_orthonormal_frame(in.mat("E"));
  if (valid && det_slack(in.mat("A"), in.mat("B"), in.mat("E")) < -1e-9) {
    res.verdict = SearchVerdict::CounterexampleFound;
    res.note = "det (AB)_E > det A_E det B_E for an antimonotone pair";
  } else {
    res.note = "open question: smallest slack of det A_E det B_E - det (AB)_E, which is evidence only";
  }
  return res;
}

}  // namespace

SearchResult counterexample_hunt(std::string_view problem, const SearchConfig& cfg) {
  cfg.validate();
  if (problem == kSchattenAbove2 || problem == kSchattenBelow2) return schatten_hunt(problem, cfg);
  if (problem == kDetAllSubspaces) return det_hunt(cfg);
  throw Error(ErrorCode::UnknownProblem, "unknown problem '" + std::string(problem) + "'");
}

}  // namespace matineq
