#include "matineq/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "law_support.hpp"

namespace matineq {

std::string_view to_string(ComparisonMode mode) {
  switch (mode) {
    case ComparisonMode::Scalar: return "scalar";
    case ComparisonMode::PerSingularValue: return "per_singular_value";
    case ComparisonMode::Loewner: return "loewner";
    case ComparisonMode::AllSymmetricNorms: return "all_symmetric_norms";
  }
  return "";
}

std::string_view to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::Generated: return "generated";
    case Provenance::Kind::File: return "file";
    case Provenance::Kind::Literal: return "literal";
  }
  return "";
}

bool is_square_kind(RoleKind kind) {
  switch (kind) {
    case RoleKind::General:
    case RoleKind::Hermitian:
    case RoleKind::Psd:
    case RoleKind::PosDef:
    case RoleKind::Normal:
    case RoleKind::Projection:
    case RoleKind::Nonnegative: return true;
    default: return false;
  }
}

bool is_sequence_kind(RoleKind kind) {
  return kind == RoleKind::RealSequence || kind == RoleKind::PositiveSequence ||
         kind == RoleKind::NonnegSequence;
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& role, const char* what) {
  const auto it = m.find(role);
  if (it == m.end()) throw Error(ErrorCode::ShapeMismatch, std::string("missing ") + what + " role " + role);
  return it->second;
}

}  // namespace

const Mat& LawInstance::mat(const std::string& role) const { return lookup(matrices, role, "matrix"); }
const CVec& LawInstance::vec(const std::string& role) const { return lookup(vectors, role, "vector"); }
const RVec& LawInstance::seq(const std::string& role) const { return lookup(sequences, role, "sequence"); }
double LawInstance::scalar(const std::string& role) const { return lookup(scalars, role, "scalar"); }

Index LawInstance::dim() const {
  for (const auto& [name, m] : matrices) {
    if (m.rows() == m.cols()) return m.rows();
  }
  for (const auto& [name, m] : matrices) return m.rows();
  for (const auto& [name, v] : vectors) return v.size();
  for (const auto& [name, s] : sequences) return s.size();
  return 0;
}

double TolerancePolicy::allowance(double lhs, double rhs) const {
  return rel * std::max({1.0, std::abs(lhs), std::abs(rhs)}) + abs;
}

bool TolerancePolicy::row_holds(const ComparisonRow& row) const {
  if (std::isnan(row.lhs) || std::isnan(row.rhs)) return false;
  if (row.rhs == std::numeric_limits<double>::infinity()) return true;
  if (row.lhs == -std::numeric_limits<double>::infinity()) return true;
  return row.rhs - row.lhs >= -allowance(row.lhs, row.rhs);
}

void TolerancePolicy::validate() const {
  if (!(rel >= 0.0) || !(abs >= 0.0) || !std::isfinite(rel) || !std::isfinite(abs)) {
    throw Error(ErrorCode::BadConfig, "tolerances must be finite and nonnegative");
  }
}

void Evaluation::add(std::string label, double lhs, double rhs, double factor) {
  rows.push_back(ComparisonRow{std::move(label), lhs, rhs, factor});
}

double Evaluation::real_checked(Complex z, const std::string& what, double scale) {
  const double bound = 1e-9 * std::max({1.0, std::abs(z), scale});
  if (std::abs(z.imag()) > bound) {
    failed_assertions.push_back(what + " has imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

void Hypotheses::require(bool ok, const std::string& message) {
  if (!ok) failures.push_back(message);
}

const RoleSpec* LawDefinition::role(const std::string& name) const {
  for (const auto& r : roles) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const std::vector<LawDefinition>& registry() {
  static const std::vector<LawDefinition> laws = [] {
    std::vector<LawDefinition> all;
    for (auto part : {detail::chebyshev_laws(), detail::kantorovich_laws(), detail::power_laws()}) {
      for (auto& law : part) all.push_back(std::move(law));
    }
    std::set<std::string> seen;
    for (const auto& law : all) {
      if (!seen.insert(law.id).second) throw Error(ErrorCode::BadConfig, "duplicate law id " + law.id);
    }
    return all;
  }();
  return laws;
}

const LawDefinition& find_law(std::string_view id) {
  for (const auto& law : registry()) {
    if (law.id == id) return law;
  }
  throw Error(ErrorCode::UnknownLaw, std::string(id));
}

void validate_shape(const LawDefinition& law, const LawInstance& inst) {
  Index n = -1;
  auto agree = [&](Index d, const std::string& role) {
    if (n < 0) n = d;
    if (d != n) {
      throw Error(ErrorCode::ShapeMismatch, "role " + role + " has dimension " + std::to_string(d) +
                                                ", expected " + std::to_string(n));
    }
  };
  for (const auto& role : law.roles) {
    if (is_square_kind(role.kind)) {
      const Mat& m = inst.mat(role.name);
      if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "role " + role.name + " is not square");
      if (!m.allFinite()) throw Error(ErrorCode::NonFinite, "role " + role.name);
      agree(m.rows(), role.name);
    } else if (role.kind == RoleKind::Frame) {
      const Mat& f = inst.mat(role.name);
      if (!f.allFinite()) throw Error(ErrorCode::NonFinite, "role " + role.name);
      agree(f.rows(), role.name);
    } else if (role.kind == RoleKind::UnitVector || role.kind == RoleKind::Vector) {
      const CVec& v = inst.vec(role.name);
      if (!v.allFinite()) throw Error(ErrorCode::NonFinite, "role " + role.name);
      agree(v.size(), role.name);
    } else if (is_sequence_kind(role.kind)) {
      const RVec& s = inst.seq(role.name);
      if (!s.allFinite()) throw Error(ErrorCode::NonFinite, "role " + role.name);
      agree(s.size(), role.name);
    } else {
      if (!std::isfinite(inst.scalar(role.name))) throw Error(ErrorCode::NonFinite, "scalar " + role.name);
    }
  }
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "empty operands");
}

Verdict check(const LawDefinition& law, const LawInstance& inst, const TolerancePolicy& tol,
              const CheckOptions& options) {
  tol.validate();
  validate_shape(law, inst);
  Verdict v;
  v.law = law.id;
  v.tolerance = tol;

  Hypotheses hyp;
  try {
    law.hypotheses(inst, hyp);
  } catch (const Error& e) {
    hyp.require(false, e.what());
  }
  v.hypothesis_ok = hyp.ok();
  v.diagnostics = hyp.failures;
  if (!v.hypothesis_ok && !options.skip_hypotheses) {
    v.slack = std::numeric_limits<double>::quiet_NaN();
    v.diagnostics.insert(v.diagnostics.begin(), "HypothesisNotMet");
    return v;
  }

  Evaluation ev;
  try {
    law.evaluate(inst, ev);
  } catch (const Error& e) {
    v.diagnostics.push_back(std::string("evaluation failed: ") + e.what());
    v.slack = std::numeric_limits<double>::quiet_NaN();
    if (v.hypothesis_ok) v.holds = false;
    return v;
  }
  v.rows = std::move(ev.rows);
  bool holds = ev.failed_assertions.empty();
  for (const auto& msg : ev.failed_assertions) v.diagnostics.push_back(msg);
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& row : v.rows) {
    const double s = row.rhs - row.lhs;
    slack = std::min(slack, std::isnan(s) ? -std::numeric_limits<double>::infinity() : s);
    if (!tol.row_holds(row)) holds = false;
  }
  v.slack = slack;
  v.holds = holds;
  return v;
}

LawInstance random_instance(const LawDefinition& law, int dim, std::uint64_t seed) {
  if (dim < law.min_dim || dim > 64) {
    throw Error(ErrorCode::UnsupportedDim,
                law.id + " needs dim in [" + std::to_string(law.min_dim) + ", 64], got " + std::to_string(dim));
  }
  Rng rng(seed);
  LawInstance inst = law.generate(dim, rng);
  inst.law = law.id;
  inst.provenance.kind = Provenance::Kind::Generated;
  inst.provenance.dim = dim;
  inst.provenance.seed = seed;
  return inst;
}

LawInstance random_instance(std::string_view id, int dim, std::uint64_t seed) {
  return random_instance(find_law(id), dim, seed);
}

}  // namespace matineq
