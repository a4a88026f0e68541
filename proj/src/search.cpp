#include "matineq/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "matineq/instance_io.hpp"
#include "matineq/structure.hpp"
#include "parallel.hpp"

namespace matineq {

void SearchConfig::validate() const {
  if (budget < 1) throw Error(ErrorCode::BadConfig, "budget must be >= 1");
  if (restarts < 1) throw Error(ErrorCode::BadConfig, "restarts must be >= 1");
  if (!(step_scale > 0.0) || !std::isfinite(step_scale)) throw Error(ErrorCode::BadConfig, "step_scale must be > 0");
  if (dim < 1 || dim > 64) throw Error(ErrorCode::BadConfig, "dim must be in [1, 64]");
}

std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::CounterexampleFound: return "counterexample_found";
    case SearchVerdict::BoundNearlyAttained: return "bound_nearly_attained";
    case SearchVerdict::Inconclusive: return "inconclusive";
  }
  return "";
}

Json to_json(const SearchResult& r) {
  Json j;
  j["target"] = r.target;
  j["verdict"] = std::string(to_string(r.verdict));
  j["measure"] = r.measure;
  j["achieved"] = number_to_json(r.achieved);
  j["bound"] = number_to_json(r.bound);
  j["evaluations"] = r.evaluations;
  j["open_problem"] = r.open_problem;
  if (!r.note.empty()) j["note"] = r.note;
  j["instance"] = r.instance ? instance_to_json(*r.instance) : Json(nullptr);
  return j;
}

std::pair<double, double> brute_force_rearrangement(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "sequences differ in length");
  if (a.size() > 9) throw Error(ErrorCode::TooLong, "brute force is limited to length 9");
  std::vector<Index> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), Index{0});
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  RVec pb(b.size());
  do {
    for (Index i = 0; i < b.size(); ++i) pb(i) = b(perm[static_cast<std::size_t>(i)]);
    const double s = paired_sum(a, pb);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {lo, hi};
}

std::optional<std::pair<double, double>> bound_ratio(const LawDefinition& law, const LawInstance& inst) {
  Verdict v;
  try {
    v = check(law, inst);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!v.hypothesis_ok) return std::nullopt;
  // a right side this far below the largest row (and the absolute unit) is
  // dominated by roundoff and says nothing about the constant
  double scale = 1.0;
  for (const auto& row : v.rows) {
    if (std::isfinite(row.lhs)) scale = std::max(scale, std::abs(row.lhs));
    if (std::isfinite(row.rhs)) scale = std::max(scale, std::abs(row.rhs));
  }
  std::optional<std::pair<double, double>> best;
  for (const auto& row : v.rows) {
    if (!(row.rhs > 1e-6 * scale) || !std::isfinite(row.rhs) || !std::isfinite(row.lhs)) continue;
    const double r = row.lhs / row.rhs;
    if (!best || r > best->first) best = std::make_pair(r, row.factor);
  }
  return best;
}

namespace {

Mat rotate(const Mat& u, double step, Rng& rng) {
  return unitary_exp(random_hermitian_direction(u.rows(), rng), step) * u;
}

double clamp_value(double x, RoleKind kind, double scale) {
  if (kind == RoleKind::Psd) return std::max(x, 0.0);
  if (kind == RoleKind::PosDef) return std::max(x, 1e-3 * scale);
  return x;
}

Mat perturb_hermitian(const Mat& m, RoleKind kind, double step, Rng& rng) {
  const auto sd = spectral_decompose(HermitianMatrix(hermitian_part(m)));
  RVec ev = sd.eigenvalues;
  const double s = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Index i = 0; i < ev.size(); ++i) ev(i) = clamp_value(ev(i) + 0.5 * step * s * rng.normal(), kind, s);
  const Mat u = rotate(sd.eigenvectors, step, rng);
  return hermitian_part(u * ev.cast<Complex>().asDiagonal() * u.adjoint());
}

Mat perturb_normal(const Mat& z, double step, Rng& rng) {
  Eigen::ComplexSchur<Mat> schur(z);
  CVec ev = schur.matrixT().diagonal();
  const double s = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Index i = 0; i < ev.size(); ++i) ev(i) += 0.5 * step * s * Complex(rng.normal(), rng.normal());
  const Mat u = rotate(schur.matrixU(), step, rng);
  return u * ev.asDiagonal() * u.adjoint();
}

void perturb_role(LawInstance& in, const RoleSpec& role, double step, Rng& rng) {
  const std::string& name = role.name;
  switch (role.kind) {
    case RoleKind::General: {
      Mat& m = in.matrices[name];
      m += step * entry_scale(m) * std::sqrt(0.5) * ginibre(m.rows(), m.cols(), rng);
      break;
    }
    case RoleKind::Hermitian:
    case RoleKind::Psd:
    case RoleKind::PosDef:
      in.matrices[name] = perturb_hermitian(in.matrices[name], role.kind, step, rng);
      break;
    case RoleKind::Normal: in.matrices[name] = perturb_normal(in.matrices[name], step, rng); break;
    case RoleKind::Projection: {
      const Mat& p = in.matrices[name];
      const Mat w = rotate(Mat::Identity(p.rows(), p.cols()), step, rng);
      in.matrices[name] = hermitian_part(w * p * w.adjoint());
      break;
    }
    case RoleKind::Frame: in.matrices[name] = rotate(in.matrices[name], step, rng); break;
    case RoleKind::Nonnegative: {
      Mat& m = in.matrices[name];
      const double s = entry_scale(m);
      for (Index i = 0; i < m.rows(); ++i) {
        for (Index k = 0; k < m.cols(); ++k) m(i, k) = std::max(0.0, m(i, k).real() + step * s * rng.normal());
      }
      break;
    }
    case RoleKind::UnitVector: {
      CVec& h = in.vectors[name];
      h = (h + step * std::sqrt(0.5) * ginibre(h.size(), 1, rng).col(0)).normalized();
      break;
    }
    case RoleKind::Vector: {
      CVec& h = in.vectors[name];
      h += step * std::max(1e-3, h.norm()) * std::sqrt(0.5) * ginibre(h.size(), 1, rng).col(0);
      break;
    }
    case RoleKind::RealSequence:
    case RoleKind::NonnegSequence: {
      RVec& v = in.sequences[name];
      const double s = std::max(1.0, v.cwiseAbs().maxCoeff());
      for (Index i = 0; i < v.size(); ++i) {
        v(i) += step * s * rng.normal();
        if (role.kind == RoleKind::NonnegSequence) v(i) = std::max(0.0, v(i));
      }
      break;
    }
    case RoleKind::PositiveSequence: {
      RVec& v = in.sequences[name];
      for (Index i = 0; i < v.size(); ++i) v(i) *= std::exp(step * rng.normal());
      break;
    }
    case RoleKind::Scalar: break;
  }
}

// Moves a jointly diagonal group in its common eigenbasis. Monotone pairs
// keep their orientation by re-pairing the sorted values.
void perturb_group(LawInstance& in, const std::vector<const RoleSpec*>& roles, bool ordered, double step,
                   Rng& rng) {
  const Mat& a0 = in.matrices[roles[0]->name];
  const Mat& b0 = in.matrices[roles[1]->name];
  std::optional<Orientation> o;
  if (ordered) o = recognize_monotone_pair(a0, b0);
  const Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(a0 + 0.6180339887498949 * b0));
  const Mat& u = es.eigenvectors();
  const Index n = u.cols();
  std::vector<RVec> values;
  for (const RoleSpec* r : roles) {
    const Mat& m = in.matrices[r->name];
    RVec v(n);
    for (Index i = 0; i < n; ++i) v(i) = inner(u.col(i), m * u.col(i)).real();
    const double s = std::max(1.0, v.cwiseAbs().maxCoeff());
    for (Index i = 0; i < n; ++i) v(i) = clamp_value(v(i) + 0.5 * step * s * rng.normal(), r->kind, s);
    values.push_back(v);
  }
  if (o && values.size() == 2) {
    values[0] = sort_rearrange(values[0], SortDirection::Up);
    values[1] = sort_rearrange(values[1], *o == Orientation::Antimonotone ? SortDirection::Down : SortDirection::Up);
  }
  const Mat w = rotate(u, step, rng);
  for (std::size_t k = 0; k < roles.size(); ++k) {
    in.matrices[roles[k]->name] = hermitian_part(w * values[k].cast<Complex>().asDiagonal() * w.adjoint());
  }
}

class Perturber {
 public:
  Perturber(const LawDefinition& law, const std::set<std::string>& frozen) : law_(law) {
    std::map<std::string, std::vector<const RoleSpec*>> groups;
    for (const auto& r : law.roles) {
      if (frozen.count(r.name) || r.kind == RoleKind::Scalar) continue;
      if (r.group.empty()) {
        units_.push_back({&r});
      } else {
        groups[r.group].push_back(&r);
      }
    }
    for (auto& [name, members] : groups) {
      if (members.size() >= 2) {
        group_units_.push_back({members, name == "pair"});
      } else {
        units_.push_back(members);
      }
    }
  }

  bool empty() const { return units_.empty() && group_units_.empty(); }

  LawInstance operator()(const LawInstance& cur, double step, Rng& rng) const {
    LawInstance next = cur;
    const std::size_t total = units_.size() + group_units_.size();
    const bool all = rng.chance(0.3);
    const std::size_t pick = static_cast<std::size_t>(rng.below(total));
    for (std::size_t i = 0; i < total; ++i) {
      if (!all && i != pick) continue;
      if (i < units_.size()) {
        perturb_role(next, *units_[i][0], step, rng);
      } else {
        const auto& g = group_units_[i - units_.size()];
        perturb_group(next, g.members, g.ordered, step, rng);
      }
    }
    if (law_.refresh) law_.refresh(next);
    return next;
  }

 private:
  struct Group {
    std::vector<const RoleSpec*> members;
    bool ordered = false;
  };
  const LawDefinition& law_;
  std::vector<std::vector<const RoleSpec*>> units_;
  std::vector<Group> group_units_;
};

void copy_frozen(LawInstance& dst, const LawInstance& src, const std::set<std::string>& frozen) {
  for (const auto& name : frozen) {
    if (auto it = src.matrices.find(name); it != src.matrices.end()) dst.matrices[name] = it->second;
    if (auto it = src.vectors.find(name); it != src.vectors.end()) dst.vectors[name] = it->second;
    if (auto it = src.sequences.find(name); it != src.sequences.end()) dst.sequences[name] = it->second;
    if (auto it = src.scalars.find(name); it != src.scalars.end()) dst.scalars[name] = it->second;
  }
}

struct Branch {
  bool found = false;
  double score = -std::numeric_limits<double>::infinity();
  double factor = 1.0;
  LawInstance inst;
  long evaluations = 0;
};

Branch climb(const LawDefinition& law, const SearchConfig& cfg, const Perturber& perturb, std::size_t index,
             long budget) {
  Rng rng(derive_seed(cfg.seed, index));
  Branch b;
  std::vector<LawInstance> starts;
  if (cfg.start && index == 0) {
    starts.push_back(*cfg.start);
  } else {
    LawInstance fresh = random_instance(law, cfg.dim, rng.next());
    if (cfg.start) {
      copy_frozen(fresh, *cfg.start, cfg.frozen);
      if (law.refresh) law.refresh(fresh);
    }
    starts.push_back(std::move(fresh));
  }
  if (index == 0 && law.warm_starts) {
    for (auto& w : law.warm_starts(starts.front())) {
      copy_frozen(w, starts.front(), cfg.frozen);
      starts.push_back(std::move(w));
    }
  }
  for (const auto& s : starts) {
    if (b.evaluations >= budget && b.found) break;
    ++b.evaluations;
    const auto r = bound_ratio(law, s);
    if (r && (!b.found || r->first > b.score)) {
      b = Branch{true, r->first, r->second, s, b.evaluations};
    }
  }
  if (!b.found || perturb.empty()) return b;
  double step = cfg.step_scale;
  while (b.evaluations < budget) {
    LawInstance cand = perturb(b.inst, step, rng);
    ++b.evaluations;
    const auto r = bound_ratio(law, cand);
    if (r && r->first > b.score) {
      b.score = r->first;
      b.factor = r->second;
      b.inst = std::move(cand);
      step = std::min(step * 1.1, 1.0);
    } else {
      step = std::max(step * 0.99, 1e-9);
    }
  }
  return b;
}

}  // namespace

SearchResult sharpness_search(const LawDefinition& law, const SearchConfig& cfg) {
  if (!law.multiplicative) throw Error(ErrorCode::NoBound, law.id + " has no multiplicative bound");
  cfg.validate();
  if (cfg.start) validate_shape(law, *cfg.start);
  const Perturber perturb(law, cfg.frozen);
  const long per_branch = std::max<long>(1, cfg.budget / cfg.restarts);
  const auto branches = detail::parallel_map<Branch>(
      static_cast<std::size_t>(cfg.restarts), cfg.workers,
      [&](std::size_t i) { return climb(law, cfg, perturb, i, per_branch); });

  SearchResult res;
  res.target = law.id;
  const Branch* best = nullptr;
  for (const auto& b : branches) {
    res.evaluations += b.evaluations;
    if (b.found && (!best || b.score > best->score)) best = &b;
  }
  if (!best) {
    res.note = "no hypothesis-valid instance with a positive right side was found";
    return res;
  }
  res.achieved = best->score * best->factor;
  res.bound = best->factor;
  res.instance = best->inst;
  if (best->score > 1.0 + 1e-8 && check(law, best->inst, TolerancePolicy{1e-12, 0.0}).violated()) {
    res.verdict = SearchVerdict::CounterexampleFound;
  } else if (best->score >= 1.0 - 1e-6) {
    res.verdict = SearchVerdict::BoundNearlyAttained;
  }
  return res;
}

SweepResult subspace_sweep(const Mat& a, const Mat& b, const std::vector<int>& dims, int samples,
                           std::uint64_t seed) {
  const auto o = recognize_monotone_pair(a, b);
  if (!o) throw Error(ErrorCode::BadConfig, "subspace sweep needs a monotone or antimonotone pair");
  const Index n = a.rows();
  std::vector<int> ks = dims;
  if (ks.empty()) {
    for (int k = 1; k <= n; ++k) ks.push_back(k);
  }
  for (int k : ks) {
    if (k < 1 || k > n) throw Error(ErrorCode::BadConfig, "subspace dimension out of range");
  }
  const bool reverse = *o == Orientation::Antimonotone;
  const Mat ab = a * b;
  SweepResult res;
  res.min_slack = std::numeric_limits<double>::infinity();
  auto visit = [&](const Mat& f) {
    const double da = compression(a, f).determinant().real();
    const double db = compression(b, f).determinant().real();
    const double dab = compression(ab, f).determinant().real();
    const double raw = reverse ? da * db - dab : dab - da * db;
    const double s = raw / std::max({1.0, std::abs(da * db), std::abs(dab)});
    ++res.evaluated;
    if (s < res.min_slack) {
      res.min_slack = s;
      res.frame = f;
    }
  };
  if (n <= 16) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      const int k = std::popcount(mask);
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) continue;
      Mat f = Mat::Zero(n, k);
      Index col = 0;
      for (Index i = 0; i < n; ++i) {
        if (mask & (1u << i)) f(i, col++) = 1.0;
      }
      visit(f);
    }
  }
  Rng rng(seed);
  for (int k : ks) {
    for (int s = 0; s < samples; ++s) visit(random_frame(n, k, rng));
  }
  return res;
}

}  // namespace matineq
