#pragma once

// Generators and recognizers for the structured operands the laws need:
// Haar unitaries, PSD and normal matrices, monotone pairs, sum-symmetric
// nonnegative matrices, permutations and sorted rearrangements.

#include <cstdint>
#include <optional>
#include <string_view>

#include "matineq/linalg.hpp"
#include "matineq/matrix_io.hpp"
#include "matineq/random.hpp"

namespace matineq {

enum class Orientation { Monotone, Antimonotone, Both };

std::string_view to_string(Orientation o);
/// True when `found` satisfies the requirement `wanted` (Both satisfies either).
bool satisfies(Orientation found, Orientation wanted);

struct GeneratorSpec {
  int dim = 1;
  std::uint64_t seed = 0;
  double lo = 0.0;
  double hi = 1.0;
  std::optional<int> rank;

  /// Throws BadRange on dim < 1, lo > hi or rank outside [0, dim].
  void validate() const;
};

Json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const Json& j);

/// Haar-distributed unitary: QR of a complex Gaussian with the phases of
/// diag(R) folded back into Q.
Mat haar_unitary(Index n, Rng& rng);
/// Entries i.i.d. standard complex Gaussian.
Mat ginibre(Index rows, Index cols, Rng& rng);
/// Random Hermitian with Gaussian entries, normalized to unit max entry.
Mat random_hermitian_direction(Index n, Rng& rng);
/// exp(i t H) for Hermitian H.
Mat unitary_exp(const Mat& hermitian, double t);
/// n x k orthonormal frame (first k columns of a Haar unitary).
Mat random_frame(Index n, Index k, Rng& rng);
CVec random_unit_vector(Index n, Rng& rng);

/// U diag(s) U* with s uniform in [lo, hi] (the last dim-rank entries zero
/// when rank is set). Requires lo >= 0.
PsdMatrix gen_psd(const GeneratorSpec& spec);

enum class SpectrumKind { Complex, Real };

/// U diag(z) U*; Complex draws Re z and Im z uniformly in [lo, hi], Real
/// draws real z (the result is then Hermitian).
Mat gen_normal(const GeneratorSpec& spec, SpectrumKind kind = SpectrumKind::Complex);

/// A = basis diag(a) basis*, B = basis diag(b) basis*.
struct MonotonePair {
  Mat basis;
  RVec a_values;
  RVec b_values;
  Orientation orientation = Orientation::Monotone;

  Mat a() const;
  Mat b() const;
};

MonotonePair gen_monotone_pair(const GeneratorSpec& spec, Orientation orientation);

/// Orientation of two real vectors under (a_i - a_j)(b_i - b_j) >= 0 (<= 0);
/// differences with |.| <= tol count as ties.
std::optional<Orientation> vector_orientation(const RVec& a, const RVec& b, double tol = 0.0);

/// Jointly diagonalizes commuting Hermitian A, B and classifies the joint
/// eigenvalue pairs. Eigenvalues of A closer than group_tol * spread are one
/// eigenspace, inside which B is unconstrained. nullopt when AB != BA.
std::optional<Orientation> recognize_monotone_pair(const Mat& a, const Mat& b,
                                                   double group_tol = kDefaultTolerances.rank);

/// Real nonnegative matrix with equal j-th row and column sums.
class SumSymmetricMatrix {
 public:
  explicit SumSymmetricMatrix(RMat entries, double tol = 1e-9);
  const RMat& entries() const noexcept { return m_; }

 private:
  RMat m_;
};

/// (|z_ij|^2) for normal Z; throws NotNormal.
SumSymmetricMatrix make_sum_symmetric_from(const Mat& z);

/// max_i row_i / col_i with the zero-column limit convention: a zero column
/// whose row is positive gives +inf, an all-zero row/column pair gives 1.
double rc_ratio(const RMat& x);

enum class SortDirection { Up, Down };
RVec sort_rearrange(const RVec& v, SortDirection direction);

/// sum_i a_i b_i with the products added in ascending order, so the result
/// depends only on the multiset of pairs and not on their indexing.
double paired_sum(const RVec& a, const RVec& b);

Mat gen_permutation(int dim, std::uint64_t seed);

struct VectorPair {
  RVec a;
  RVec b;
  bool nonnegative = false;

  /// Throws DimensionMismatch / NegativeEntry.
  VectorPair(RVec a, RVec b, bool nonnegative);
};

}  // namespace matineq
