// Rearrangement laws of Chebyshev type: products of monotone pairs against
// normal matrices, their trace, vector and determinant forms, and the Gruss
// bounds on the defect.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "law_support.hpp"

namespace matineq::detail {

namespace {

const NormId kOp = NormId::operator_norm();
const NormId kFrob = NormId::frobenius();

// A = P G^{-1}, B = G, so AB = P.
std::pair<Mat, Mat> factor_through(const Mat& p, Index n, Rng& rng) {
  const Mat g = draw_invertible(n, rng);
  return {p * g.inverse(), g};
}

void put_pair(LawInstance& inst, const MonotonePair& pair) {
  inst.matrices["A"] = pair.a();
  inst.matrices["B"] = pair.b();
}

// Nonnegative vectors (a, b) sorted together under a common permutation.
std::pair<RVec, RVec> ordered_vectors(Index n, Rng& rng, Orientation o, double lo, double hi) {
  RVec a(n);
  RVec b(n);
  const bool coarse = rng.chance(0.25);
  for (Index i = 0; i < n; ++i) {
    a(i) = rng.uniform(lo, hi);
    b(i) = rng.uniform(lo, hi);
    if (coarse) {
      a(i) = std::round(a(i) * 2.0) / 2.0;
      b(i) = std::round(b(i) * 2.0) / 2.0;
    }
  }
  a = sort_rearrange(a, SortDirection::Up);
  b = sort_rearrange(b, o == Orientation::Monotone ? SortDirection::Up : SortDirection::Down);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  for (Index i = n - 1; i > 0; --i) {
    const auto j = static_cast<Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  RVec pa(n);
  RVec pb(n);
  for (Index i = 0; i < n; ++i) {
    pa(i) = a(perm[static_cast<std::size_t>(i)]);
    pb(i) = b(perm[static_cast<std::size_t>(i)]);
  }
  return {pa, pb};
}

Mat real_matrix(const RMat& x) { return x.cast<Complex>(); }

LawDefinition opnorm_normal() {
  LawDefinition d;
  d.id = "L-OPNORM-NORMAL";
  d.summary = "||AB||_op <= ||BA||_op when AB is normal";
  d.roles = {{"A", RoleKind::General, ""}, {"B", RoleKind::General, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    h.require(is_normal(in.mat("A") * in.mat("B")), "AB is not normal");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    ev.add("operator", norm(Mat(a * b), kOp), norm(Mat(b * a), kOp));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-OPNORM-NORMAL");
    auto [a, b] = factor_through(draw_normal(n, rng), n, rng);
    in.matrices["A"] = a;
    in.matrices["B"] = b;
    return in;
  };
  return d;
}

LawDefinition cheb_vec() {
  LawDefinition d;
  d.id = "L-CHEB-VEC";
  d.summary = "||Ah|| ||Bh|| <= ||ABh|| and <h,Ah><h,Bh> <= <h,ABh> for monotone A, B >= 0; reversed when antimonotone";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"h", RoleKind::UnitVector, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B");
    require_unit(in, h, "h");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const CVec& h = in.vec("h");
    const CVec ah = a * h;
    const CVec bh = b * h;
    const CVec abh = a * bh;
    const double na = ah.norm();
    const double nb = bh.norm();
    const double nab = abh.norm();
    const double ia = ev.real_checked(inner(h, ah), "<h,Ah>");
    const double ib = ev.real_checked(inner(h, bh), "<h,Bh>");
    const double iab = ev.real_checked(inner(h, abh), "<h,ABh>");
    const Orientation o = pair_orientation(in, "A", "B");
    if (satisfies(o, Orientation::Monotone)) {
      ev.add("norm", na * nb, nab);
      ev.add("inner", ia * ib, iab);
    }
    if (satisfies(o, Orientation::Antimonotone)) {
      ev.add("norm_reversed", nab, na * nb);
      ev.add("inner_reversed", iab, ia * ib);
    }
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-CHEB-VEC");
    put_pair(in, draw_pair(n, rng, draw_orientation(rng), 0.0, 2.0));
    in.vectors["h"] = draw_unit(n, rng);
    return in;
  };
  return d;
}

LawDefinition frob_cheb() {
  LawDefinition d;
  d.id = "L-FROB-CHEB";
  d.summary = "||AZB||_2 <= ||ZAB||_2 for monotone A, B >= 0 and normal Z; reversed when antimonotone";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"Z", RoleKind::Normal, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B");
    require_normal(in, h, "Z");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    const double azb = norm(Mat(a * z * b), kFrob);
    const double zab = norm(Mat(z * a * b), kFrob);
    const Orientation o = pair_orientation(in, "A", "B");
    if (satisfies(o, Orientation::Monotone)) ev.add("frobenius", azb, zab);
    if (satisfies(o, Orientation::Antimonotone)) ev.add("frobenius_reversed", zab, azb);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-FROB-CHEB");
    put_pair(in, draw_pair(n, rng, draw_orientation(rng), 0.0, 2.0));
    in.matrices["Z"] = draw_normal(n, rng);
    return in;
  };
  return d;
}

LawDefinition trace_cheb() {
  LawDefinition d;
  d.id = "L-TRACE-CHEB";
  d.summary = "Tr Z*AZB <= Tr Z*ZAB for a Hermitian monotone pair and normal Z; reversed when antimonotone";
  d.roles = {{"A", RoleKind::Hermitian, "pair"}, {"B", RoleKind::Hermitian, "pair"}, {"Z", RoleKind::Normal, ""}};
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_pair(in, h, "A", "B");
    require_normal(in, h, "Z");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& z = in.mat("Z");
    const double scale = entry_scale(z) * entry_scale(z) * entry_scale(a) * entry_scale(b) *
                         static_cast<double>(z.rows());
    const double cross = ev.real_checked((z.adjoint() * a * z * b).trace(), "Tr Z*AZB", scale);
    const double direct = ev.real_checked((z.adjoint() * z * a * b).trace(), "Tr Z*ZAB", scale);
    const Orientation o = pair_orientation(in, "A", "B");
    if (satisfies(o, Orientation::Monotone)) ev.add("trace", cross, direct);
    if (satisfies(o, Orientation::Antimonotone)) ev.add("trace_reversed", direct, cross);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-TRACE-CHEB");
    put_pair(in, draw_pair(n, rng, draw_orientation(rng), -2.0, 2.0));
    in.matrices["Z"] = draw_normal(n, rng);
    return in;
  };
  return d;
}

LawDefinition von_neumann() {
  LawDefinition d;
  d.id = "L-VONNEUMANN";
  d.summary = "|Tr XY| <= sum_j mu_j(X) mu_j(Y)";
  d.roles = {{"X", RoleKind::General, ""}, {"Y", RoleKind::General, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance&, Hypotheses&) {};
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& x = in.mat("X");
    const Mat& y = in.mat("Y");
    ev.add("trace", std::abs((x * y).trace()), svals(x).dot(svals(y)));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-VONNEUMANN");
    in.matrices["X"] = draw_general(n, rng);
    // occasionally make Y share singular vectors with X to approach equality
    if (rng.chance(0.2)) {
      Eigen::JacobiSVD<Mat> svd(in.matrices["X"], Eigen::ComputeFullU | Eigen::ComputeFullV);
      RVec s(n);
      for (Index i = 0; i < n; ++i) s(i) = rng.uniform(0.0, 2.0);
      std::sort(s.begin(), s.end(), std::greater<>());
      in.matrices["Y"] = svd.matrixV() * s.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
    } else {
      in.matrices["Y"] = draw_general(n, rng);
    }
    return in;
  };
  return d;
}

LawDefinition hlp() {
  LawDefinition d;
  d.id = "L-HLP";
  d.shape = LawShape::Sequence;
  d.summary = "sum a(up) b(down) <= sum a b <= sum a(up) b(up) for real sequences";
  d.roles = {{"a", RoleKind::RealSequence, ""}, {"b", RoleKind::RealSequence, ""}};
  d.hypotheses = [](const LawInstance&, Hypotheses&) {};
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const RVec& a = in.seq("a");
    const RVec& b = in.seq("b");
    const RVec au = sort_rearrange(a, SortDirection::Up);
    const RVec bu = sort_rearrange(b, SortDirection::Up);
    const RVec bd = sort_rearrange(b, SortDirection::Down);
    const double mid = paired_sum(a, b);
    ev.add("lower", paired_sum(au, bd), mid);
    ev.add("upper", mid, paired_sum(au, bu));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-HLP");
    const bool coarse = rng.chance(0.3);
    RVec a(n);
    RVec b(n);
    for (Index i = 0; i < n; ++i) {
      a(i) = coarse ? static_cast<double>(rng.integer(-3, 3)) : rng.uniform(-3.0, 3.0);
      b(i) = coarse ? static_cast<double>(rng.integer(-3, 3)) : rng.uniform(-3.0, 3.0);
    }
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    return in;
  };
  return d;
}

std::pair<RVec, RVec> rc_sides(const LawInstance& in) {
  const RMat x = in.mat("X").real();
  const RVec& a = in.seq("a");
  const RVec& b = in.seq("b");
  return {RVec::Constant(1, a.dot(x * b)), RVec::Constant(1, (x * a.cwiseProduct(b)).sum())};
}

LawDefinition rc_law() {
  LawDefinition d;
  d.id = "L-RC";
  d.summary = "sum a.X(b) <= rc(X) sum X(a.b) for nonnegative X and a monotone nonnegative pair (a, b)";
  d.roles = {{"X", RoleKind::Nonnegative, ""}, {"a", RoleKind::NonnegSequence, ""}, {"b", RoleKind::NonnegSequence, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_nonnegative_matrix(in, h, "X");
    require_positive_sequence(in, h, "a", false);
    require_positive_sequence(in, h, "b", false);
    const auto o = vector_orientation(in.seq("a"), in.seq("b"));
    h.require(o && satisfies(*o, Orientation::Monotone), "(a, b) is not a monotone pair");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const double rc = rc_ratio(in.mat("X").real());
    const auto [lhs, base] = rc_sides(in);
    const double inf = std::numeric_limits<double>::infinity();
    // infinite rc times a zero sum is still infinite
    const double rhs = std::isinf(rc) ? inf : rc * base(0);
    ev.add("rc", lhs(0), rhs, rc);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-RC");
    RMat x(n, n);
    const bool sparse = rng.chance(0.3);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) x(i, j) = (sparse && rng.chance(0.4)) ? 0.0 : rng.uniform(0.0, 1.0);
    }
    in.matrices["X"] = real_matrix(x);
    auto [a, b] = ordered_vectors(n, rng, Orientation::Monotone, 0.0, 2.0);
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    return in;
  };
  // the canonical basis vector at the maximizing row paired with all ones
  d.warm_starts = [](const LawInstance& base) {
    std::vector<LawInstance> out;
    const RMat x = base.mat("X").real();
    const RVec rows = x.rowwise().sum();
    const RVec cols = x.colwise().sum().transpose();
    Index best = -1;
    double best_ratio = -1.0;
    for (Index i = 0; i < x.rows(); ++i) {
      if (cols(i) > 0.0 && rows(i) / cols(i) > best_ratio) {
        best_ratio = rows(i) / cols(i);
        best = i;
      }
    }
    if (best < 0) return out;
    LawInstance w = base;
    w.sequences["a"] = RVec::Unit(x.rows(), best);
    w.sequences["b"] = RVec::Ones(x.rows());
    w.provenance.kind = Provenance::Kind::Literal;
    out.push_back(std::move(w));
    return out;
  };
  return d;
}

LawDefinition sumsym() {
  LawDefinition d;
  d.id = "L-SUMSYM";
  d.summary = "sum a.X(b) <= sum X(a.b) for sum-symmetric X and a monotone pair; reversed when antimonotone";
  d.roles = {{"X", RoleKind::Nonnegative, ""}, {"a", RoleKind::RealSequence, ""}, {"b", RoleKind::RealSequence, ""}};
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    if (!require_nonnegative_matrix(in, h, "X")) return;
    try {
      SumSymmetricMatrix x(in.mat("X").real());
    } catch (const Error& e) {
      h.require(false, std::string("X is not sum-symmetric (") + e.what() + ")");
    }
    h.require(vector_orientation(in.seq("a"), in.seq("b")).has_value(),
              "(a, b) is neither monotone nor antimonotone");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [cross, direct] = rc_sides(in);
    const Orientation o = *vector_orientation(in.seq("a"), in.seq("b"));
    if (satisfies(o, Orientation::Monotone)) ev.add("sum", cross(0), direct(0));
    if (satisfies(o, Orientation::Antimonotone)) ev.add("sum_reversed", direct(0), cross(0));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-SUMSYM");
    in.matrices["X"] = real_matrix(make_sum_symmetric_from(draw_normal(n, rng)).entries());
    auto [a, b] = ordered_vectors(n, rng, draw_orientation(rng), -2.0, 2.0);
    in.sequences["a"] = a;
    in.sequences["b"] = b;
    return in;
  };
  return d;
}

LawDefinition proj_sv() {
  LawDefinition d;
  d.id = "L-PROJ-SV";
  d.mode = ComparisonMode::PerSingularValue;
  d.summary = "mu_j(AEB) <= mu_j(ABE) for a monotone pair A, B >= 0 and a projection E";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"E", RoleKind::Projection, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B", Orientation::Monotone);
    require_projection(in, h, "E");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat& e = in.mat("E");
    // mu_j(ABE) = mu_j(EBA) = mu_j(EAB) since A and B commute
    add_profile_rows(ev, "mu", svals(a * e * b), svals(e * a * b));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-PROJ-SV");
    put_pair(in, draw_pair(n, rng, Orientation::Monotone, 0.0, 2.0));
    in.matrices["E"] = draw_projection(n, rng);
    return in;
  };
  return d;
}

struct DetSides {
  double a = 0.0;
  double b = 0.0;
  double ab = 0.0;
};

DetSides compressed_dets(const LawInstance& in, Evaluation& ev) {
  const Mat& a = in.mat("A");
  const Mat& b = in.mat("B");
  const Mat& f = in.mat("E");
  DetSides s;
  s.a = ev.real_checked(compression(a, f).determinant(), "det A_E");
  s.b = ev.real_checked(compression(b, f).determinant(), "det B_E");
  s.ab = ev.real_checked(compression(Mat(a * b), f).determinant(), "det (AB)_E");
  return s;
}

LawDefinition det_cheb() {
  LawDefinition d;
  d.id = "L-DET-CHEB";
  d.summary = "det A_E det B_E <= det (AB)_E for a monotone positive pair and every subspace E";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"E", RoleKind::Frame, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B", Orientation::Monotone);
    require_frame(in, h, "E");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const DetSides s = compressed_dets(in, ev);
    ev.add("det", s.a * s.b, s.ab);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-DET-CHEB");
    put_pair(in, draw_pair(n, rng, Orientation::Monotone, 0.1, 2.0));
    in.matrices["E"] = draw_frame(n, rng, 1, n);
    return in;
  };
  return d;
}

LawDefinition det_cheb_rev() {
  LawDefinition d;
  d.id = "L-DET-CHEB-REV";
  d.summary = "det (AB)_E <= det A_E det B_E for an antimonotone positive pair, E of dimension 1 or codimension 1";
  d.roles = {{"A", RoleKind::Psd, "pair"}, {"B", RoleKind::Psd, "pair"}, {"E", RoleKind::Frame, ""}};
  d.multiplicative = true;
  d.min_dim = 2;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "B", false);
    require_pair(in, h, "A", "B", Orientation::Antimonotone);
    if (require_frame(in, h, "E")) {
      const Index k = in.mat("E").cols();
      const Index n = in.mat("E").rows();
      h.require(k == 1 || k == n - 1, "E must have dimension 1 or codimension 1");
    }
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const DetSides s = compressed_dets(in, ev);
    ev.add("det_reversed", s.ab, s.a * s.b);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-DET-CHEB-REV");
    put_pair(in, draw_pair(n, rng, Orientation::Antimonotone, 0.1, 2.0));
    in.matrices["E"] = random_frame(n, rng.chance(0.5) ? 1 : n - 1, rng);
    return in;
  };
  return d;
}

void gruss_roles(LawDefinition& d, RoleKind z_kind) {
  d.roles = {{"Z", z_kind, ""},           {"A", RoleKind::Hermitian, ""}, {"B", RoleKind::Hermitian, ""},
             {"p", RoleKind::Scalar, ""}, {"q", RoleKind::Scalar, ""},    {"r", RoleKind::Scalar, ""},
             {"s", RoleKind::Scalar, ""}};
  d.refresh = [](LawInstance& in) {
    store_extremes(in, "A", "p", "q");
    store_extremes(in, "B", "r", "s");
  };
}

bool gruss_bounds(const LawInstance& in, Hypotheses& h) {
  const bool a = require_hermitian(in, h, "A") && require_spectral_bounds(in, h, "A", "p", "q");
  const bool b = require_hermitian(in, h, "B") && require_spectral_bounds(in, h, "B", "r", "s");
  return a && b;
}

LawDefinition gruss_trace() {
  LawDefinition d;
  d.id = "L-GRUSS-TRACE";
  d.summary = "|Tr Z^2 AB - Tr ZAZB| <= (p-q)(r-s)/4 Tr Z^2 for Z >= 0 and Hermitian A, B with spectra in [q,p], [s,r]";
  gruss_roles(d, RoleKind::Psd);
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", false);
    gruss_bounds(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat z2 = z * z;
    const Complex diff = (z2 * a * b).trace() - (z * a * z * b).trace();
    const double bound = gruss_bound(in.scalar("p"), in.scalar("q"), in.scalar("r"), in.scalar("s"));
    ev.add("trace", std::abs(diff), bound * ev.real_checked(z2.trace(), "Tr Z^2"));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-GRUSS-TRACE");
    in.matrices["Z"] = draw_psd(n, rng, 0.0, 2.0, true);
    in.matrices["A"] = draw_hermitian(n, rng, -2.0, 2.0);
    in.matrices["B"] = draw_hermitian(n, rng, -2.0, 2.0);
    store_extremes(in, "A", "p", "q");
    store_extremes(in, "B", "r", "s");
    return in;
  };
  return d;
}

LawDefinition gruss_normal() {
  LawDefinition d;
  d.id = "L-GRUSS-NORMAL";
  d.summary = "|Tr |Z|^2 AB - Tr Z*AZB| <= (p-q)(r-s)/2 Tr |Z|^2 for normal Z and Hermitian A, B with spectra in [q,p], [s,r]";
  gruss_roles(d, RoleKind::Normal);
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_normal(in, h, "Z");
    gruss_bounds(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const Mat zz = z.adjoint() * z;
    const Complex diff = (zz * a * b).trace() - (z.adjoint() * a * z * b).trace();
    const double bound = 2.0 * gruss_bound(in.scalar("p"), in.scalar("q"), in.scalar("r"), in.scalar("s"));
    ev.add("trace", std::abs(diff), bound * ev.real_checked(zz.trace(), "Tr |Z|^2"));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-GRUSS-NORMAL");
    in.matrices["Z"] = draw_normal(n, rng, 1.5);
    in.matrices["A"] = draw_hermitian(n, rng, -2.0, 2.0);
    in.matrices["B"] = draw_hermitian(n, rng, -2.0, 2.0);
    store_extremes(in, "A", "p", "q");
    store_extremes(in, "B", "r", "s");
    return in;
  };
  return d;
}

LawDefinition varcov() {
  LawDefinition d;
  d.id = "L-VARCOV";
  d.summary = "|<h,ABh> - <h,Ah><h,Bh>| <= (p-q)(r-s)/4 for unit h and Hermitian A, B with spectra in [q,p], [s,r]";
  d.roles = {{"A", RoleKind::Hermitian, ""}, {"B", RoleKind::Hermitian, ""}, {"h", RoleKind::UnitVector, ""},
             {"p", RoleKind::Scalar, ""},    {"q", RoleKind::Scalar, ""},    {"r", RoleKind::Scalar, ""},
             {"s", RoleKind::Scalar, ""}};
  d.refresh = [](LawInstance& in) {
    store_extremes(in, "A", "p", "q");
    store_extremes(in, "B", "r", "s");
  };
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    gruss_bounds(in, h);
    require_unit(in, h, "h");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat& b = in.mat("B");
    const CVec& h = in.vec("h");
    const CVec bh = b * h;
    const Complex cov = inner(h, a * bh) - inner(h, a * h) * inner(h, bh);
    ev.add("covariance", std::abs(cov),
           gruss_bound(in.scalar("p"), in.scalar("q"), in.scalar("r"), in.scalar("s")));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-VARCOV");
    in.matrices["A"] = draw_hermitian(n, rng, -2.0, 2.0);
    in.matrices["B"] = rng.chance(0.2) ? Mat(in.matrices["A"]) : draw_hermitian(n, rng, -2.0, 2.0);
    in.vectors["h"] = draw_unit(n, rng);
    store_extremes(in, "A", "p", "q");
    store_extremes(in, "B", "r", "s");
    return in;
  };
  return d;
}

}  // namespace

std::vector<LawDefinition> chebyshev_laws() {
  return {opnorm_normal(), cheb_vec(),     frob_cheb(),  trace_cheb(),   von_neumann(),
          hlp(),           rc_law(),       sumsym(),     proj_sv(),      det_cheb(),
          det_cheb_rev(),  gruss_trace(),  gruss_normal(), varcov()};
}

}  // namespace matineq::detail
