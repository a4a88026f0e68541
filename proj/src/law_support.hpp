#pragma once

// Shared pieces for the registry files: instance generators, hypothesis
// checks and row builders. Private to the library.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matineq/constants.hpp"
#include "matineq/laws.hpp"
#include "matineq/linalg.hpp"
#include "matineq/norms.hpp"
#include "matineq/structure.hpp"

namespace matineq::detail {

std::vector<LawDefinition> chebyshev_laws();
std::vector<LawDefinition> kantorovich_laws();
std::vector<LawDefinition> power_laws();

LawInstance blank_instance(const std::string& law);

// ---- generation ----------------------------------------------------------

/// PSD with spectrum in [lo, hi]; occasionally repeats an eigenvalue and,
/// when allow_singular, zeroes a few.
Mat draw_psd(Index n, Rng& rng, double lo, double hi, bool allow_singular = false);
Mat draw_hermitian(Index n, Rng& rng, double lo, double hi);
Mat draw_normal(Index n, Rng& rng, double radius = 1.0);
Mat draw_general(Index n, Rng& rng);
/// U diag(s) V* with s in [lo, hi].
Mat draw_invertible(Index n, Rng& rng, double lo = 0.5, double hi = 2.0);
Orientation draw_orientation(Rng& rng);
/// Monotone pair with occasional ties in a_values.
MonotonePair draw_pair(Index n, Rng& rng, Orientation orientation, double lo, double hi);
CVec draw_unit(Index n, Rng& rng);
/// Orthonormal frame with a random number of columns in [kmin, kmax].
Mat draw_frame(Index n, Rng& rng, Index kmin, Index kmax);
/// Ordered projection onto a random subspace of random rank in [0, n].
Mat draw_projection(Index n, Rng& rng);

/// Unit vector with weight b/(a+b) on the top eigenvector of a positive
/// matrix and a/(a+b) on the bottom one: the extremal vector of the
/// Kantorovich ratio ||Zh|| / <h, Zh>.
CVec kantorovich_vector(const Mat& z);

// ---- hypotheses ----------------------------------------------------------

bool require_hermitian(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_psd(const LawInstance& inst, Hypotheses& hyp, const std::string& role, bool strict);
bool require_normal(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_projection(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_unit(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_frame(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_nonnegative_matrix(const LawInstance& inst, Hypotheses& hyp, const std::string& role);
bool require_positive_sequence(const LawInstance& inst, Hypotheses& hyp, const std::string& role,
                               bool strict);
/// Requires a commuting pair with an orientation; `wanted` restricts it.
std::optional<Orientation> require_pair(const LawInstance& inst, Hypotheses& hyp,
                                        const std::string& a, const std::string& b,
                                        std::optional<Orientation> wanted = std::nullopt);
/// Stored bounds must enclose the spectrum: q <= lambda_min, lambda_max <= p.
bool require_spectral_bounds(const LawInstance& inst, Hypotheses& hyp, const std::string& role,
                             const std::string& upper, const std::string& lower);
/// Orientation of the stored pair; assumes require_pair already passed.
Orientation pair_orientation(const LawInstance& inst, const std::string& a, const std::string& b);

// ---- evaluation ----------------------------------------------------------

/// Hermitian part, validated PSD, raised to p. For 0 < p < 1 eigenvalues
/// below rank_tol * lambda_max are treated as exact zeros so that roundoff
/// is not amplified by the root.
Mat psd_pow(const Mat& m, double p);
Mat psd_sqrt(const Mat& m);
/// (largest, smallest) eigenvalue of a PSD role; nonzero_only as in core-la.
std::pair<double, double> extremes(const Mat& z, bool nonzero_only);

RVec svals(const Mat& x);
double trace_norm(const Mat& x);

/// Rows lhs_j <= factor * rhs_j for j = 1..n with labels prefix_j.
void add_profile_rows(Evaluation& ev, const std::string& prefix, const RVec& lhs, const RVec& rhs,
                      double factor = 1.0);
/// Ky Fan sweep rows for ||X|| <= factor ||Y||.
void add_kyfan_rows(Evaluation& ev, const Mat& x, const Mat& y, double factor = 1.0);
/// L <= R in the Loewner order, reported along the eigenvector of the
/// smallest eigenvalue of R - L.
void add_loewner_row(Evaluation& ev, const std::string& label, const Mat& l, const Mat& r,
                     double factor = 1.0);

/// Writes spectral extremes of a Hermitian role into two scalar roles.
void store_extremes(LawInstance& inst, const std::string& role, const std::string& upper,
                    const std::string& lower);

}  // namespace matineq::detail
