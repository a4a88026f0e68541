// Kantorovich-type laws: the factor (a+b)/(2 sqrt(ab)) built from the
// spectrum of a positive Z, and its commuting-pair and sequence versions.

#include <algorithm>
#include <cmath>

#include "law_support.hpp"

namespace matineq::detail {

namespace {

const NormId kOp = NormId::operator_norm();

double k1(const Mat& z, bool nonzero_only = false) {
  const auto [a, b] = extremes(z, nonzero_only);
  return kantorovich_factor(a, b);
}

// Positive definite with condition number up to 20.
Mat draw_posdef(Index n, Rng& rng) {
  const double lo = rng.uniform(0.05, 1.0);
  return draw_psd(n, rng, lo, lo * rng.uniform(1.0, 20.0));
}

Mat rank_one(const CVec& h) { return h * h.adjoint(); }

void put_pair(LawInstance& in, const MonotonePair& pair) {
  in.matrices["A"] = pair.a();
  in.matrices["B"] = pair.b();
}

LawInstance literal_copy(const LawInstance& base) {
  LawInstance w = base;
  w.provenance.kind = Provenance::Kind::Literal;
  return w;
}

// A, B > 0 sharing an eigenbasis with a_i / b_i in [0.3, 3].
void draw_commuting(LawInstance& in, Index n, Rng& rng) {
  const Mat u = haar_unitary(n, rng);
  RVec a(n);
  RVec b(n);
  for (Index i = 0; i < n; ++i) {
    b(i) = rng.uniform(0.2, 2.0);
    a(i) = b(i) * rng.uniform(0.3, 3.0);
  }
  in.matrices["A"] = PsdMatrix::from_spectrum(u, a).mat();
  in.matrices["B"] = PsdMatrix::from_spectrum(u, b).mat();
}

// Spectrum of A B^{-1} for commuting A, B > 0 (Hermitian up to roundoff).
RVec ratio_spectrum(const LawInstance& in) {
  return hermitian_eigenvalues(hermitian_part(in.mat("A") * in.mat("B").inverse()));
}

bool require_commuting(const LawInstance& in, Hypotheses& h) {
  const bool pd = require_psd(in, h, "A", true) && require_psd(in, h, "B", true);
  if (!pd) return false;
  const bool ok = commutator_defect(in.mat("A"), in.mat("B")) <= 1e-8;
  h.require(ok, "A and B do not commute");
  return ok;
}

bool inside(double x, double p, double q) {
  const double tol = 1e-9 * std::max({1.0, std::abs(p), std::abs(q)});
  return x <= p + tol && x >= q - tol;
}

bool require_ratio_bounds(const LawInstance& in, Hypotheses& h) {
  const double p = in.scalar("p");
  const double q = in.scalar("q");
  const bool ordered = q > 0.0 && p >= q;
  h.require(ordered, "need p >= q > 0");
  return ordered;
}

LawDefinition sv_kant() {
  LawDefinition d;
  d.id = "L-SV-KANT";
  d.mode = ComparisonMode::PerSingularValue;
  d.summary = "mu_j(AZB) <= K mu_j(ZAB) for a monotone pair A, B >= 0 and Z >= 0, K from the nonzero spectrum of Z";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"Z", RoleKind::Psd, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B", Orientation::Monotone);
    if (require_psd(in, h, "Z", false)) extremes(in.mat("Z"), true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    add_profile_rows(ev, "mu", svals(a * z * b), svals(z * a * b), k1(z, true));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SV-KANT");
    put_pair(in, draw_pair(n, rng, Orientation::Monotone, 0.0, 2.0));
    if (rng.chance(0.2)) {
      const Mat f = draw_frame(n, rng, 1, n);
      in.matrices["Z"] = hermitian_part(f * f.adjoint());
    } else {
      in.matrices["Z"] = draw_psd(n, rng, 0.1, 3.0, true);
    }
    return in;
  };
  return d;
}

LawDefinition kant_vec() {
  LawDefinition d;
  d.id = "L-KANT-VEC";
  d.summary = "||Zh|| <= K <h,Zh> for Z > 0 and unit h";
  d.roles = {{"Z", RoleKind::PosDef, ""}, {"h", RoleKind::UnitVector, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", true);
    require_unit(in, h, "h");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const CVec& h = in.vec("h");
    const CVec zh = z * h;
    const double k = k1(z);
    ev.add("kantorovich", zh.norm(), k * ev.real_checked(inner(h, zh), "<h,Zh>"), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-KANT-VEC");
    in.matrices["Z"] = draw_posdef(n, rng);
    in.vectors["h"] = draw_unit(n, rng);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    w.vectors["h"] = kantorovich_vector(base.mat("Z"));
    return std::vector<LawInstance>{w};
  };
  return d;
}

LawDefinition opnorm_rho() {
  LawDefinition d;
  d.id = "L-OPNORM-RHO";
  d.summary = "||AZ||_op <= K rho(AZ) for A >= 0 and Z > 0";
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", RoleKind::PosDef, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat az = in.mat("A") * in.mat("Z");
    const double k = k1(in.mat("Z"));
    ev.add("operator", norm(az, kOp), k * spectral_radius(az), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-OPNORM-RHO");
    in.matrices["A"] = draw_psd(n, rng, 0.0, 2.0, true);
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    w.matrices["A"] = rank_one(kantorovich_vector(base.mat("Z")));
    return std::vector<LawInstance>{w};
  };
  return d;
}

LawDefinition loewner_aza() {
  LawDefinition d;
  d.id = "L-LOEWNER-AZA";
  d.mode = ComparisonMode::Loewner;
  d.summary = "AZA <= K^2 Z for 0 <= A <= I and Z > 0";
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", RoleKind::PosDef, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    if (require_psd(in, h, "A", false)) {
      const Mat& a = in.mat("A");
      try {
        PsdMatrix(Mat(Mat::Identity(a.rows(), a.cols()) - a));
      } catch (const Error&) {
        h.require(false, "A is not below the identity");
      }
    }
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& z = in.mat("Z");
    const double k = k1(z);
    add_loewner_row(ev, "loewner", a * z * a, k * k * z, k * k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-LOEWNER-AZA");
    const Mat u = haar_unitary(n, rng);
    RVec s(n);
    for (Index i = 0; i < n; ++i) {
      const double r = rng.uniform();
      s(i) = r < 0.15 ? 0.0 : (r < 0.3 ? 1.0 : rng.uniform());
    }
    in.matrices["A"] = PsdMatrix::from_spectrum(u, s).mat();
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    w.matrices["A"] = rank_one(kantorovich_vector(base.mat("Z")));
    return std::vector<LawInstance>{w};
  };
  return d;
}

LawDefinition sv_kant_rev() {
  LawDefinition d;
  d.id = "L-SV-KANT-REV";
  d.mode = ComparisonMode::PerSingularValue;
  d.summary = "mu_j(ZAB) <= K mu_j(AZB) for a monotone pair A, B >= 0 and Z > 0";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"Z", RoleKind::PosDef, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B", Orientation::Monotone);
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    add_profile_rows(ev, "mu", svals(z * a * b), svals(a * z * b), k1(z));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SV-KANT-REV");
    put_pair(in, draw_pair(n, rng, Orientation::Monotone, 0.0, 2.0));
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    const Mat e = rank_one(kantorovich_vector(base.mat("Z")));
    w.matrices["A"] = e;
    w.matrices["B"] = e;
    return std::vector<LawInstance>{w};
  };
  return d;
}

LawDefinition sandwich() {
  LawDefinition d;
  d.id = "L-SANDWICH";
  d.mode = ComparisonMode::PerSingularValue;
  d.summary = "lambda_k(AZ)/K <= mu_k(AZ) <= K lambda_k(AZ) for A >= 0 and Z > 0";
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", RoleKind::PosDef, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& z = in.mat("Z");
    const Mat r = psd_sqrt(z);
    // AZ is similar to Z^{1/2} A Z^{1/2}, whose spectrum is real
    const RVec lambda = hermitian_eigenvalues(hermitian_part(r * a * r));
    const RVec mu = svals(a * z);
    const double k = k1(z);
    add_profile_rows(ev, "lower", lambda, mu, k);
    add_profile_rows(ev, "upper", mu, lambda, k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SANDWICH");
    in.matrices["A"] = draw_psd(n, rng, 0.0, 2.0, true);
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    w.matrices["A"] = rank_one(kantorovich_vector(base.mat("Z")));
    return std::vector<LawInstance>{w};
  };
  return d;
}

// A = P G^{-1}, B = G with P >= 0, so AB = P.
void draw_psd_product(LawInstance& in, Index n, Rng& rng) {
  const Mat p = draw_psd(n, rng, 0.0, 2.0, true);
  const Mat g = draw_invertible(n, rng);
  in.matrices["A"] = p * g.inverse();
  in.matrices["B"] = g;
}

LawDefinition symnorm_kant() {
  LawDefinition d;
  d.id = "L-SYMNORM-KANT";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||ZAB|| <= K ||BZA|| in every symmetric norm when AB >= 0 and Z > 0";
  d.roles = {{"A", RoleKind::General, ""}, {"B", RoleKind::General, ""}, {"Z", RoleKind::PosDef, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    try {
      PsdMatrix(Mat(in.mat("A") * in.mat("B")));
    } catch (const Error& e) {
      h.require(false, std::string("AB is not positive semidefinite (") + e.what() + ")");
    }
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    add_kyfan_rows(ev, z * a * b, b * z * a, k1(z));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SYMNORM-KANT");
    draw_psd_product(in, n, rng);
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  return d;
}

LawDefinition symnorm_normal() {
  LawDefinition d;
  d.id = "L-SYMNORM-NORMAL";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||AB|| <= ||BA|| in every symmetric norm when AB is normal";
  d.roles = {{"A", RoleKind::General, ""}, {"B", RoleKind::General, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    h.require(is_normal(in.mat("A") * in.mat("B")), "AB is not normal");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    add_kyfan_rows(ev, a * b, b * a);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SYMNORM-NORMAL");
    const Mat g = draw_invertible(n, rng);
    in.matrices["A"] = draw_normal(n, rng) * g.inverse();
    in.matrices["B"] = g;
    return in;
  };
  return d;
}

LawDefinition pinch() {
  LawDefinition d;
  d.id = "L-PINCH";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||diag X|| <= ||X|| in every symmetric norm";
  d.roles = {{"X", RoleKind::General, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance&, Hypotheses&) {};
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& x = in.mat("X");
    add_kyfan_rows(ev, diag_pinch(x), x);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-PINCH");
    in.matrices["X"] = rng.chance(0.2) ? draw_normal(n, rng) : draw_general(n, rng);
    return in;
  };
  return d;
}

void commuting_roles(LawDefinition& d) {
  d.roles = {{"A", RoleKind::PosDef, "commuting"},
             {"B", RoleKind::PosDef, "commuting"},
             {"p", RoleKind::Scalar, ""},
             {"q", RoleKind::Scalar, ""}};
}

void store_ratio_bounds(LawInstance& in) {
  const RVec r = ratio_spectrum(in);
  in.scalars["p"] = r(0);
  in.scalars["q"] = r(r.size() - 1);
}

bool require_matrix_ratio(const LawInstance& in, Hypotheses& h) {
  if (!require_commuting(in, h) || !require_ratio_bounds(in, h)) return false;
  const RVec r = ratio_spectrum(in);
  const bool ok = inside(r(0), in.scalar("p"), in.scalar("q")) &&
                  inside(r(r.size() - 1), in.scalar("p"), in.scalar("q"));
  h.require(ok, "spectrum of AB^{-1} is not inside [q, p]");
  return ok;
}

LawDefinition commute_kant() {
  LawDefinition d;
  d.id = "L-COMMUTE-KANT";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||AZB|| <= (p+q)/(2 sqrt(pq)) ||ZAB|| for commuting A, B > 0 with pI >= AB^{-1} >= qI and Z >= 0";
  commuting_roles(d);
  d.roles.push_back({"Z", RoleKind::Psd, ""});
  d.multiplicative = true;
  d.refresh = store_ratio_bounds;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_matrix_ratio(in, h);
    require_psd(in, h, "Z", false);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    add_kyfan_rows(ev, a * z * b, z * a * b, kantorovich_factor(in.scalar("p"), in.scalar("q")));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-COMMUTE-KANT");
    draw_commuting(in, n, rng);
    in.matrices["Z"] = draw_psd(n, rng, 0.0, 2.0, true);
    store_ratio_bounds(in);
    return in;
  };
  return d;
}

void store_sequence_bounds(LawInstance& in) {
  const RVec r = in.seq("a").cwiseQuotient(in.seq("b"));
  in.scalars["p"] = r.maxCoeff();
  in.scalars["q"] = r.minCoeff();
}

bool require_sequence_ratio(const LawInstance& in, Hypotheses& h) {
  const bool pos = require_positive_sequence(in, h, "a", true) & require_positive_sequence(in, h, "b", true);
  if (!pos || !require_ratio_bounds(in, h)) return false;
  const RVec r = in.seq("a").cwiseQuotient(in.seq("b"));
  const bool ok = inside(r.maxCoeff(), in.scalar("p"), in.scalar("q")) &&
                  inside(r.minCoeff(), in.scalar("p"), in.scalar("q"));
  h.require(ok, "some a_i / b_i is outside [q, p]");
  return ok;
}

LawDefinition rev_rearr() {
  LawDefinition d;
  d.id = "L-REV-REARR";
  d.shape = LawShape::Sequence;
  d.summary = "sum a(down) b(down) <= (p+q)/(2 sqrt(pq)) sum a b for positive sequences with p >= a_i/b_i >= q";
  d.roles = {{"a", RoleKind::PositiveSequence, ""},
             {"b", RoleKind::PositiveSequence, ""},
             {"p", RoleKind::Scalar, ""},
             {"q", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.refresh = store_sequence_bounds;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) { require_sequence_ratio(in, h); };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const RVec& a = in.seq("a");
    const RVec& b = in.seq("b");
    const double k = kantorovich_factor(in.scalar("p"), in.scalar("q"));
    ev.add("reverse",
           paired_sum(sort_rearrange(a, SortDirection::Down), sort_rearrange(b, SortDirection::Down)),
           k * paired_sum(a, b), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-REV-REARR");
    const bool coarse = rng.chance(0.25);
    RVec a(n);
    RVec b(n);
    for (Index i = 0; i < n; ++i) {
      a(i) = coarse ? static_cast<double>(rng.integer(1, 4)) : rng.uniform(0.1, 3.0);
      b(i) = coarse ? static_cast<double>(rng.integer(1, 4)) : rng.uniform(0.1, 3.0);
    }
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    store_sequence_bounds(in);
    return in;
  };
  // pairs alternating between (2, 1) and (1, 2): equality when n is even
  d.warm_starts = [](const LawInstance& base) {
    LawInstance w = literal_copy(base);
    const Index n = base.seq("a").size();
    RVec a(n);
    RVec b(n);
    for (Index i = 0; i < n; ++i) {
      a(i) = i % 2 == 0 ? 2.0 : 1.0;
      b(i) = i % 2 == 0 ? 1.0 : 2.0;
    }
    w.sequences["a"] = a;
    w.sequences["b"] = b;
    store_sequence_bounds(w);
    return std::vector<LawInstance>{w};
  };
  return d;
}

void store_cassel_bounds(LawInstance& in) {
  const RVec r = ratio_spectrum(in);
  const RVec s = in.seq("a").cwiseQuotient(in.seq("b"));
  in.scalars["p"] = std::max(r(0), s.maxCoeff());
  in.scalars["q"] = std::min(r(r.size() - 1), s.minCoeff());
}

LawDefinition cassel() {
  LawDefinition d;
  d.id = "L-CASSEL";
  d.summary = "||Ah|| ||Bh|| <= (p+q)/(2 sqrt(pq)) <Ah,Bh> for commuting A, B > 0, and the weighted sequence form";
  commuting_roles(d);
  d.roles.push_back({"h", RoleKind::Vector, ""});
  d.roles.push_back({"a", RoleKind::PositiveSequence, ""});
  d.roles.push_back({"b", RoleKind::PositiveSequence, ""});
  d.roles.push_back({"w", RoleKind::NonnegSequence, ""});
  d.multiplicative = true;
  d.refresh = store_cassel_bounds;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_matrix_ratio(in, h);
    require_sequence_ratio(in, h);
    require_positive_sequence(in, h, "w", false);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const double k = kantorovich_factor(in.scalar("p"), in.scalar("q"));
    const CVec& h = in.vec("h");
    const CVec ah = in.mat("A") * h;
    const CVec bh = in.mat("B") * h;
    const double scale = ah.norm() * bh.norm();
    ev.add("matrix", ah.norm() * bh.norm(), k * ev.real_checked(inner(ah, bh), "<Ah,Bh>", scale), k);
    const RVec& a = in.seq("a");
    const RVec& b = in.seq("b");
    const RVec& w = in.seq("w");
    const double wa = std::sqrt(w.dot(a.cwiseAbs2()));
    const double wb = std::sqrt(w.dot(b.cwiseAbs2()));
    ev.add("weighted", wa * wb, k * w.dot(a.cwiseProduct(b)), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-CASSEL");
    draw_commuting(in, n, rng);
    in.vectors["h"] = ginibre(n, 1, rng).col(0) * rng.uniform(0.1, 3.0);
    RVec a(n);
    RVec b(n);
    RVec w(n);
    for (Index i = 0; i < n; ++i) {
      b(i) = rng.uniform(0.2, 2.0);
      a(i) = b(i) * rng.uniform(0.3, 3.0);
      w(i) = rng.chance(0.2) ? 0.0 : rng.uniform(0.0, 1.0);
    }
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    in.sequences["w"] = w;
    store_cassel_bounds(in);
    return in;
  };
  return d;
}

// Cassel form of Dragomir's inequality. The condition is symmetric in (p, q)
// and, with p, q < 0, reduces to the positive case for -a.
LawDefinition dragomir() {
  LawDefinition d;
  d.id = "L-DRAGOMIR";
  d.shape = LawShape::Sequence;
  d.summary = "||a|| ||b|| <= (p+q)/(2 sqrt(pq)) <a,b> for real a, b with <a-qb, pb-a> >= 0 and pq > 0";
  d.roles = {{"a", RoleKind::RealSequence, ""},
             {"b", RoleKind::RealSequence, ""},
             {"p", RoleKind::Scalar, ""},
             {"q", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    const double p = in.scalar("p");
    const double q = in.scalar("q");
    const RVec& a = in.seq("a");
    const RVec& b = in.seq("b");
    h.require(p * q > 0.0, "need pq > 0");
    h.require(b.norm() > 0.0, "b is zero");
    const double cond = (a - q * b).dot(p * b - a);
    const double scale = std::max({1.0, a.squaredNorm(), std::abs(p * q) * b.squaredNorm()});
    h.require(cond >= -1e-9 * scale, "<a - qb, pb - a> < 0");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const double p = std::abs(in.scalar("p"));
    const double q = std::abs(in.scalar("q"));
    const double sign = in.scalar("p") > 0.0 ? 1.0 : -1.0;
    const double k = kantorovich_factor(std::max(p, q), std::min(p, q));
    const RVec& a = in.seq("a");
    const RVec& b = in.seq("b");
    ev.add("cassel", a.norm() * b.norm(), k * sign * a.dot(b), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-DRAGOMIR");
    RVec b(n);
    for (Index i = 0; i < n; ++i) b(i) = rng.normal();
    double q = rng.uniform(0.2, 2.0);
    double p = q * rng.uniform(1.0, 10.0);
    // a in the ball centred at (p+q)/2 b with radius (p-q)/2 ||b||
    RVec u(n);
    for (Index i = 0; i < n; ++i) u(i) = rng.normal();
    u /= u.norm();
    const double rho = rng.chance(0.3) ? 1.0 : std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
    RVec a = 0.5 * (p + q) * b + rho * 0.5 * (p - q) * b.norm() * u;
    if (rng.chance(0.25)) {
      a = -a;
      p = -p;
      q = -q;
    }
    if (rng.chance(0.3)) std::swap(p, q);
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    in.scalars["p"] = p;
    in.scalars["q"] = q;
    return in;
  };
  return d;
}

LawDefinition mond_pecaric() {
  LawDefinition d;
  d.id = "L-MOND-PECARIC";
  d.mode = ComparisonMode::Loewner;
  d.summary = "(Z^{-1})_E <= K^2 (Z_E)^{-1} for Z > 0 and every subspace E";
  d.roles = {{"Z", RoleKind::PosDef, ""}, {"E", RoleKind::Frame, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", true);
    require_frame(in, h, "E");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const Mat& f = in.mat("E");
    const double k = k1(z);
    const Mat inv_e = compression(Mat(z.inverse()), f);
    const Mat e_inv = compression(z, f).inverse();
    add_loewner_row(ev, "loewner", inv_e, k * k * e_inv, k * k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-MOND-PECARIC");
    in.matrices["Z"] = draw_posdef(n, rng);
    in.matrices["E"] = draw_frame(n, rng, 1, n);
    return in;
  };
  return d;
}

}  // namespace

std::vector<LawDefinition> kantorovich_laws() {
  return {sv_kant(),        kant_vec(),       opnorm_rho(), loewner_aza(), sv_kant_rev(),
          sandwich(),       symnorm_kant(),   symnorm_normal(), pinch(),  commute_kant(),
          rev_rearr(),      cassel(),         dragomir(),   mond_pecaric()};
}

}  // namespace matineq::detail
