// Power laws: Araki's inequality, Jensen for t^p and its reverses with the
// constants K(a,b,p) and C(a,b,p), and the additive reverse bound.

#include <cmath>

#include "law_support.hpp"

namespace matineq::detail {

namespace {

const NormId kOp = NormId::operator_norm();

Mat draw_posdef(Index n, Rng& rng) {
  const double lo = rng.uniform(0.05, 1.0);
  return draw_psd(n, rng, lo, lo * rng.uniform(1.0, 10.0));
}

LawInstance literal_copy(const LawInstance& base) {
  LawInstance w = base;
  w.provenance.kind = Provenance::Kind::Literal;
  return w;
}

bool require_exponent_above_one(const LawInstance& in, Hypotheses& h) {
  const bool ok = in.scalar("p") > 1.0;
  h.require(ok, "need p > 1");
  return ok;
}

double kf(const Mat& z, double p) {
  const auto [a, b] = extremes(z, false);
  return ky_fan_K(a, b, p);
}

double fc(const Mat& z, double p) {
  const auto [a, b] = extremes(z, false);
  return furuta_C(a, b, p);
}

// Both sides of Araki's comparison: (AZA)^p and A^p Z^p A^p.
std::pair<Mat, Mat> araki_sides(const LawInstance& in) {
  const Mat& a = in.mat("A");
  const Mat& z = in.mat("Z");
  const double p = in.scalar("p");
  const Mat ap = psd_pow(a, p);
  return {psd_pow(hermitian_part(a * z * a), p), ap * psd_pow(z, p) * ap};
}

// Golden-section maximum of a unimodal f on [0, 1].
template <typename F>
double argmax_unit(F f) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double x1 = hi - g * (hi - lo);
    const double x2 = lo + g * (hi - lo);
    if (f(x1) < f(x2)) {
      lo = x1;
    } else {
      hi = x2;
    }
  }
  return 0.5 * (lo + hi);
}

// Unit vector sqrt(y) v_top + sqrt(1-y) v_bottom.
CVec two_point(const Mat& z, double y) {
  const auto sd = spectral_decompose(HermitianMatrix(z));
  const Index n = sd.eigenvalues.size();
  return std::sqrt(y) * sd.eigenvectors.col(0) + std::sqrt(1.0 - y) * sd.eigenvectors.col(n - 1);
}

LawDefinition araki() {
  LawDefinition d;
  d.id = "L-ARAKI";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||(AZA)^p|| <= ||A^p Z^p A^p|| in every symmetric norm for A, Z >= 0 and p > 1; reversed for 0 < p < 1";
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", RoleKind::Psd, ""}, {"p", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", false);
    h.require(in.scalar("p") > 0.0, "need p > 0");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [x, y] = araki_sides(in);
    if (in.scalar("p") >= 1.0) {
      add_kyfan_rows(ev, x, y);
    } else {
      add_kyfan_rows(ev, y, x);
    }
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-ARAKI");
    if (rng.chance(0.6)) {
      in.scalars["p"] = rng.uniform(1.0, 3.5);
      in.matrices["A"] = draw_psd(n, rng, 0.0, 1.5, true);
      in.matrices["Z"] = draw_psd(n, rng, 0.0, 2.0, true);
    } else {
      in.scalars["p"] = rng.uniform(0.1, 0.95);
      in.matrices["A"] = draw_psd(n, rng, 0.2, 2.0);
      in.matrices["Z"] = draw_psd(n, rng, 0.2, 2.0);
    }
    return in;
  };
  return d;
}

LawDefinition jensen() {
  LawDefinition d;
  d.id = "L-JENSEN-P";
  d.summary = "<h,Zh>^p <= <h,Z^p h> for Z >= 0, unit h and p > 1";
  d.roles = {{"Z", RoleKind::Psd, ""}, {"h", RoleKind::UnitVector, ""}, {"p", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", false);
    require_unit(in, h, "h");
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const CVec& h = in.vec("h");
    const double p = in.scalar("p");
    const double m = std::max(0.0, ev.real_checked(inner(h, z * h), "<h,Zh>"));
    ev.add("jensen", std::pow(m, p), ev.real_checked(inner(h, psd_pow(z, p) * h), "<h,Z^p h>"));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-JENSEN-P");
    in.matrices["Z"] = draw_psd(n, rng, 0.0, 3.0, true);
    in.vectors["h"] = draw_unit(n, rng);
    in.scalars["p"] = rng.uniform(1.0, 4.0);
    return in;
  };
  return d;
}

LawDefinition rev_jensen() {
  LawDefinition d;
  d.id = "L-FURUTA-REV-JENSEN";
  d.summary = "<h,Z^p h> <= K(a,b,p) <h,Zh>^p for Z > 0, unit h and p > 1 or p < 0";
  d.roles = {{"Z", RoleKind::PosDef, ""}, {"h", RoleKind::UnitVector, ""}, {"p", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", true);
    require_unit(in, h, "h");
    const double p = in.scalar("p");
    h.require(p > 1.0 || p < 0.0, "need p > 1 or p < 0");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const CVec& h = in.vec("h");
    const double p = in.scalar("p");
    const double k = kf(z, p);
    const double m = ev.real_checked(inner(h, z * h), "<h,Zh>");
    ev.add("reverse_jensen", ev.real_checked(inner(h, psd_pow(z, p) * h), "<h,Z^p h>"), k * std::pow(m, p), k);
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-FURUTA-REV-JENSEN");
    in.matrices["Z"] = draw_posdef(n, rng);
    in.vectors["h"] = draw_unit(n, rng);
    in.scalars["p"] = rng.chance(0.6) ? rng.uniform(1.0, 4.0) : rng.uniform(-3.0, -0.1);
    if (in.scalars["p"] == 1.0) in.scalars["p"] = 2.0;
    return in;
  };
  // the two-point vector on the extreme eigenvectors at the maximizing weight
  d.warm_starts = [](const LawInstance& base) {
    const auto [a, b] = extremes(base.mat("Z"), false);
    const double p = base.scalar("p");
    const double y = argmax_unit([&](double t) {
      return (t * std::pow(a, p) + (1.0 - t) * std::pow(b, p)) / std::pow(t * a + (1.0 - t) * b, p);
    });
    LawInstance w = literal_copy(base);
    w.vectors["h"] = two_point(base.mat("Z"), y);
    return std::vector<LawInstance>{w};
  };
  return d;
}

void araki_roles(LawDefinition& d, RoleKind z_kind) {
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", z_kind, ""}, {"p", RoleKind::Scalar, ""}};
}

LawInstance draw_araki(const std::string& id, int n, Rng& rng, bool z_strict) {
  LawInstance in = blank_instance(id);
  in.matrices["A"] = draw_psd(n, rng, 0.0, 1.5, true);
  in.matrices["Z"] = z_strict ? draw_posdef(n, rng) : draw_psd(n, rng, 0.0, 2.0, true);
  in.scalars["p"] = rng.uniform(1.05, 3.0);
  return in;
}

LawDefinition fst_opnorm() {
  LawDefinition d;
  d.id = "L-FST-OPNORM";
  d.summary = "||A^p Z^p A^p||_op <= K(a,b,p) ||(AZA)^p||_op for A >= 0, Z > 0 and p > 1";
  araki_roles(d, RoleKind::PosDef);
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", true);
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [x, y] = araki_sides(in);
    const double k = kf(in.mat("Z"), in.scalar("p"));
    ev.add("operator", norm(y, kOp), k * norm(x, kOp), k);
  };
  d.generate = [](int n, Rng& rng) { return draw_araki("L-FST-OPNORM", n, rng, true); };
  return d;
}

LawDefinition araki_rev_sv() {
  LawDefinition d;
  d.id = "L-ARAKI-REV-SV";
  d.mode = ComparisonMode::PerSingularValue;
  d.summary = "mu_j((AZA)^p)/K <= mu_j(A^p Z^p A^p) <= K mu_j((AZA)^p) for A >= 0, Z > 0 and p > 1";
  araki_roles(d, RoleKind::PosDef);
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", true);
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [x, y] = araki_sides(in);
    const double k = kf(in.mat("Z"), in.scalar("p"));
    const RVec sx = svals(x);
    const RVec sy = svals(y);
    add_profile_rows(ev, "lower", sx, sy, k);
    add_profile_rows(ev, "upper", sy, sx, k);
  };
  d.generate = [](int n, Rng& rng) { return draw_araki("L-ARAKI-REV-SV", n, rng, true); };
  return d;
}

LawDefinition furuta_trace() {
  LawDefinition d;
  d.id = "L-FURUTA-TRACE";
  d.summary = "Tr A^p Z^p A^p - Tr (AZA)^p <= C(a,b,p) Tr A^{2p} for A, Z >= 0 and p > 1";
  araki_roles(d, RoleKind::Psd);
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", false);
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [x, y] = araki_sides(in);
    const double p = in.scalar("p");
    const Mat a2p = psd_pow(in.mat("A"), 2.0 * p);
    const double diff = ev.real_checked(y.trace(), "Tr A^p Z^p A^p") - ev.real_checked(x.trace(), "Tr (AZA)^p");
    ev.add("trace", diff, fc(in.mat("Z"), p) * ev.real_checked(a2p.trace(), "Tr A^{2p}"));
  };
  d.generate = [](int n, Rng& rng) { return draw_araki("L-FURUTA-TRACE", n, rng, false); };
  return d;
}

LawDefinition furuta_symnorm() {
  LawDefinition d;
  d.id = "L-FURUTA-SYMNORM";
  d.mode = ComparisonMode::AllSymmetricNorms;
  d.summary = "||A^p Z^p A^p|| - ||(AZA)^p|| <= C(a,b,p) ||A^{2p}|| for every Ky Fan norm, A, Z >= 0 and p > 1";
  araki_roles(d, RoleKind::Psd);
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", false);
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const auto [x, y] = araki_sides(in);
    const double p = in.scalar("p");
    const double c = fc(in.mat("Z"), p);
    const RVec kx = ky_fan_profile(x);
    const RVec ky = ky_fan_profile(y);
    const RVec ka = ky_fan_profile(psd_pow(in.mat("A"), 2.0 * p));
    for (Index k = 0; k < kx.size(); ++k) {
      ev.add("kyfan_" + std::to_string(k + 1), ky(k) - kx(k), c * ka(k));
    }
  };
  d.generate = [](int n, Rng& rng) { return draw_araki("L-FURUTA-SYMNORM", n, rng, false); };
  return d;
}

LawDefinition proj_trace_power() {
  LawDefinition d;
  d.id = "L-PROJ-TRACE-POWER";
  d.summary = "Tr F X^p F <= Tr F Y^p F for 0 <= X <= Y, a projection F commuting with X and p > 1";
  d.roles = {{"X", RoleKind::Psd, ""},
             {"Y", RoleKind::Psd, ""},
             {"F", RoleKind::Projection, ""},
             {"p", RoleKind::Scalar, ""}};
  d.multiplicative = true;
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "X", false);
    require_psd(in, h, "Y", false);
    require_projection(in, h, "F");
    require_exponent_above_one(in, h);
    try {
      PsdMatrix(Mat(in.mat("Y") - in.mat("X")));
    } catch (const Error&) {
      h.require(false, "X <= Y fails");
    }
    h.require(commutator_defect(in.mat("F"), in.mat("X")) <= 1e-8, "F does not commute with X");
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& f = in.mat("F");
    const double p = in.scalar("p");
    const Mat fx = f * psd_pow(in.mat("X"), p) * f;
    const Mat fy = f * psd_pow(in.mat("Y"), p) * f;
    ev.add("trace", ev.real_checked(fx.trace(), "Tr FX^pF"), ev.real_checked(fy.trace(), "Tr FY^pF"));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-PROJ-TRACE-POWER");
    const Mat u = haar_unitary(n, rng);
    RVec x(n);
    RVec f(n);
    for (Index i = 0; i < n; ++i) {
      x(i) = rng.chance(0.15) ? 0.0 : rng.uniform(0.0, 2.0);
      f(i) = rng.chance(0.5) ? 1.0 : 0.0;
    }
    in.matrices["X"] = PsdMatrix::from_spectrum(u, x).mat();
    in.matrices["F"] = PsdMatrix::from_spectrum(u, f).mat();
    in.matrices["Y"] = in.matrices["X"] + draw_psd(n, rng, 0.0, 1.0, true);
    in.scalars["p"] = rng.uniform(1.05, 3.5);
    return in;
  };
  return d;
}

LawDefinition add_rev_opnorm() {
  LawDefinition d;
  d.id = "L-ADD-REV-OPNORM";
  d.summary = "||AZ||_op - rho(AZ) <= (a-b)^2/(4(a+b)) ||A||_op for A >= 0 and Z > 0";
  d.roles = {{"A", RoleKind::Psd, ""}, {"Z", RoleKind::PosDef, ""}};
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "A", false);
    require_psd(in, h, "Z", true);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& a = in.mat("A");
    const Mat az = a * in.mat("Z");
    const auto [za, zb] = extremes(in.mat("Z"), false);
    ev.add("operator", norm(az, kOp) - spectral_radius(az), additive_reverse_bound(za, zb) * norm(a, kOp));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-ADD-REV-OPNORM");
    in.matrices["A"] = draw_psd(n, rng, 0.0, 2.0, true);
    in.matrices["Z"] = draw_posdef(n, rng);
    return in;
  };
  return d;
}

LawDefinition furuta_scalar() {
  LawDefinition d;
  d.id = "L-FURUTA-SCALAR";
  d.summary = "<h,Z^p h> - <h,Zh>^p <= C(a,b,p) for Z >= 0, unit h and p > 1";
  d.roles = {{"Z", RoleKind::Psd, ""}, {"h", RoleKind::UnitVector, ""}, {"p", RoleKind::Scalar, ""}};
  d.hypotheses = [](const LawInstance& in, Hypotheses& h) {
    require_psd(in, h, "Z", false);
    require_unit(in, h, "h");
    require_exponent_above_one(in, h);
  };
  d.evaluate = [](const LawInstance& in, Evaluation& ev) {
    const Mat& z = in.mat("Z");
    const CVec& h = in.vec("h");
    const double p = in.scalar("p");
    const double m = std::max(0.0, ev.real_checked(inner(h, z * h), "<h,Zh>"));
    const double top = ev.real_checked(inner(h, psd_pow(z, p) * h), "<h,Z^p h>");
    ev.add("furuta", top - std::pow(m, p), fc(z, p));
  };
  d.generate = [](int n, Rng& rng) {
    LawInstance in = blank_instance("L-FURUTA-SCALAR");
    in.matrices["Z"] = draw_psd(n, rng, 0.0, 3.0, true);
    in.vectors["h"] = draw_unit(n, rng);
    in.scalars["p"] = rng.uniform(1.05, 4.0);
    return in;
  };
  d.warm_starts = [](const LawInstance& base) {
    const auto [a, b] = extremes(base.mat("Z"), false);
    const double p = base.scalar("p");
    const double y = argmax_unit([&](double t) {
      return t * std::pow(a, p) + (1.0 - t) * std::pow(b, p) - std::pow(t * a + (1.0 - t) * b, p);
    });
    LawInstance w = literal_copy(base);
    w.vectors["h"] = two_point(base.mat("Z"), y);
    return std::vector<LawInstance>{w};
  };
  return d;
}

}  // namespace

std::vector<LawDefinition> power_laws() {
  return {araki(),        jensen(),         rev_jensen(),       fst_opnorm(),     araki_rev_sv(),
          furuta_trace(), furuta_symnorm(), proj_trace_power(), add_rev_opnorm(), furuta_scalar()};
}

}  // namespace matineq::detail
