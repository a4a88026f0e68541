#include "matineq/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace matineq {

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Monotone: return "monotone";
    case Orientation::Antimonotone: return "antimonotone";
    case Orientation::Both: return "both";
  }
  return "";
}

bool satisfies(Orientation found, Orientation wanted) {
  return found == Orientation::Both || found == wanted;
}

void GeneratorSpec::validate() const {
  if (dim < 1) throw Error(ErrorCode::BadRange, "dim must be >= 1");
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::BadRange, "spectrum range must satisfy lo <= hi");
  }
  if (rank && (*rank < 0 || *rank > dim)) throw Error(ErrorCode::BadRange, "rank outside [0, dim]");
}

Json to_json(const GeneratorSpec& spec) {
  Json j{{"dim", spec.dim}, {"seed", spec.seed}, {"lo", spec.lo}, {"hi", spec.hi}};
  j["rank"] = spec.rank ? Json(*spec.rank) : Json(nullptr);
  return j;
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  try {
    GeneratorSpec s;
    s.dim = j.at("dim").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.lo = j.at("lo").get<double>();
    s.hi = j.at("hi").get<double>();
    if (j.contains("rank") && !j["rank"].is_null()) s.rank = j["rank"].get<int>();
    s.validate();
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("generator spec: ") + e.what());
  }
}

Mat ginibre(Index rows, Index cols, Rng& rng) {
  Mat g(rows, cols);
  for (Index k = 0; k < cols; ++k) {
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, k) = Complex(re, im);
    }
  }
  return g;
}

Mat haar_unitary(Index n, Rng& rng) {
  const Mat g = ginibre(n, n, rng) * std::sqrt(0.5);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(n, n);
  const Mat& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double m = std::abs(d);
    q.col(k) *= (m > 0.0 ? d / m : Complex(1.0, 0.0));
  }
  return q;
}

Mat random_hermitian_direction(Index n, Rng& rng) {
  Mat h = hermitian_part(ginibre(n, n, rng));
  const double m = max_abs(h);
  return m > 0.0 ? Mat(h / m) : h;
}

Mat unitary_exp(const Mat& hermitian, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(hermitian));
  const Index n = hermitian.rows();
  CVec phases(n);
  for (Index i = 0; i < n; ++i) phases(i) = std::polar(1.0, t * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat random_frame(Index n, Index k, Rng& rng) { return haar_unitary(n, rng).leftCols(k); }

CVec random_unit_vector(Index n, Rng& rng) {
  CVec v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

namespace {

RVec draw_spectrum(const GeneratorSpec& spec, Rng& rng) {
  RVec s(spec.dim);
  for (Index i = 0; i < spec.dim; ++i) s(i) = rng.uniform(spec.lo, spec.hi);
  if (spec.rank) {
    std::sort(s.begin(), s.end(), std::greater<>());
    for (Index i = *spec.rank; i < spec.dim; ++i) s(i) = 0.0;
  }
  return s;
}

}  // namespace

PsdMatrix gen_psd(const GeneratorSpec& spec) {
  spec.validate();
  if (spec.lo < 0.0) throw Error(ErrorCode::BadRange, "PSD spectrum must lie in [0, inf)");
  Rng rng(spec.seed);
  const Mat u = haar_unitary(spec.dim, rng);
  return PsdMatrix::from_spectrum(u, draw_spectrum(spec, rng));
}

Mat gen_normal(const GeneratorSpec& spec, SpectrumKind kind) {
  spec.validate();
  Rng rng(spec.seed);
  const Mat u = haar_unitary(spec.dim, rng);
  CVec z(spec.dim);
  for (Index i = 0; i < spec.dim; ++i) {
    const double re = rng.uniform(spec.lo, spec.hi);
    const double im = kind == SpectrumKind::Complex ? rng.uniform(spec.lo, spec.hi) : 0.0;
    z(i) = Complex(re, im);
  }
  if (spec.rank) {
    for (Index i = *spec.rank; i < spec.dim; ++i) z(i) = 0.0;
  }
  Mat out = u * z.asDiagonal() * u.adjoint();
  if (kind == SpectrumKind::Real) out = hermitian_part(out);
  return out;
}

Mat MonotonePair::a() const {
  return hermitian_part(basis * a_values.cast<Complex>().asDiagonal() * basis.adjoint());
}

Mat MonotonePair::b() const {
  return hermitian_part(basis * b_values.cast<Complex>().asDiagonal() * basis.adjoint());
}

MonotonePair gen_monotone_pair(const GeneratorSpec& spec, Orientation orientation) {
  spec.validate();
  if (orientation == Orientation::Both) {
    throw Error(ErrorCode::BadRange, "generate either a monotone or an antimonotone pair");
  }
  Rng rng(spec.seed);
  MonotonePair pair;
  pair.basis = haar_unitary(spec.dim, rng);
  pair.orientation = orientation;
  pair.a_values.resize(spec.dim);
  pair.b_values.resize(spec.dim);
  for (Index i = 0; i < spec.dim; ++i) pair.a_values(i) = rng.uniform(spec.lo, spec.hi);
  for (Index i = 0; i < spec.dim; ++i) pair.b_values(i) = rng.uniform(spec.lo, spec.hi);
  std::sort(pair.a_values.begin(), pair.a_values.end());
  std::sort(pair.b_values.begin(), pair.b_values.end());
  if (spec.rank) {
    const Index zeros = spec.dim - *spec.rank;
    for (Index i = 0; i < zeros; ++i) {
      pair.a_values(i) = 0.0;
      pair.b_values(i) = 0.0;
    }
  }
  if (orientation == Orientation::Antimonotone) pair.b_values.reverseInPlace();
  return pair;
}

std::optional<Orientation> vector_orientation(const RVec& a, const RVec& b, double tol) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  bool mono = true;
  bool anti = true;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = i + 1; j < a.size(); ++j) {
      const double da = a(i) - a(j);
      const double db = b(i) - b(j);
      if (std::abs(da) <= tol || std::abs(db) <= tol) continue;
      if ((da > 0) == (db > 0)) {
        anti = false;
      } else {
        mono = false;
      }
    }
  }
  if (mono && anti) return Orientation::Both;
  if (mono) return Orientation::Monotone;
  if (anti) return Orientation::Antimonotone;
  return std::nullopt;
}

std::optional<Orientation> recognize_monotone_pair(const Mat& a, const Mat& b, double group_tol) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "pair dimensions differ");
  if (commutator_defect(a, b) > 1e-8) return std::nullopt;
  const auto da = spectral_decompose(HermitianMatrix(a));
  const RVec& av = da.eigenvalues;
  const Index n = av.size();
  const double spread_a = av(0) - av(n - 1);

  // group eigenvalues of A (descending) into numerically equal clusters
  std::vector<std::pair<Index, Index>> groups;
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    if (i == n || av(i - 1) - av(i) > group_tol * std::max(spread_a, entry_scale(a) * 1e-3)) {
      groups.emplace_back(start, i);
      start = i;
    }
  }

  RVec ja(n);
  RVec jb(n);
  RVec group_id(n);
  const HermitianMatrix hb(b);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto [lo, hi] = groups[g];
    const Mat frame = da.eigenvectors.middleCols(lo, hi - lo);
    const Mat bc = hermitian_part(frame.adjoint() * hb.mat() * frame);
    Eigen::SelfAdjointEigenSolver<Mat> es(bc, Eigen::EigenvaluesOnly);
    for (Index i = lo; i < hi; ++i) {
      ja(i) = av(i);
      jb(i) = es.eigenvalues()(i - lo);
      group_id(i) = static_cast<double>(g);
    }
  }

  const double spread_b = jb.maxCoeff() - jb.minCoeff();
  const double tie_b = group_tol * std::max(spread_b, entry_scale(b) * 1e-3);
  bool mono = true;
  bool anti = true;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (group_id(i) == group_id(j)) continue;
      const double dbv = jb(i) - jb(j);
      if (std::abs(dbv) <= tie_b) continue;
      // ja is descending across groups, so ja(i) > ja(j)
      if (dbv > 0) {
        anti = false;
      } else {
        mono = false;
      }
    }
  }
  if (mono && anti) return Orientation::Both;
  if (mono) return Orientation::Monotone;
  if (anti) return Orientation::Antimonotone;
  return std::nullopt;
}

SumSymmetricMatrix::SumSymmetricMatrix(RMat entries, double tol) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::NotSquare, "sum-symmetric matrix must be square");
  if (!m_.allFinite()) throw Error(ErrorCode::NonFinite, "non-finite entry");
  if (m_.size() > 0 && m_.minCoeff() < 0.0) throw Error(ErrorCode::NegativeEntry, "negative entry");
  const RVec rows = m_.rowwise().sum();
  const RVec cols = m_.colwise().sum().transpose();
  const double scale = std::max(1.0, rows.size() ? rows.maxCoeff() : 0.0);
  if (rows.size() && (rows - cols).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorCode::NotSumSymmetric, "row and column sums differ");
  }
}

SumSymmetricMatrix make_sum_symmetric_from(const Mat& z) {
  require_square_finite(z, "Z");
  if (!is_normal(z, 1e-8)) throw Error(ErrorCode::NotNormal, "Z is not normal");
  return SumSymmetricMatrix(z.cwiseAbs2());
}

double rc_ratio(const RMat& x) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::NotSquare, "rc needs a square matrix");
  if (x.size() > 0 && x.minCoeff() < 0.0) throw Error(ErrorCode::NegativeEntry, "negative entry");
  const RVec rows = x.rowwise().sum();
  const RVec cols = x.colwise().sum().transpose();
  double rc = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < x.rows(); ++i) {
    double ratio;
    if (cols(i) > 0.0) {
      ratio = rows(i) / cols(i);
    } else if (rows(i) > 0.0) {
      return std::numeric_limits<double>::infinity();
    } else {
      // zero row and zero column: (n r) / (n r) in the r -> 0 limit
      ratio = 1.0;
    }
    rc = std::max(rc, ratio);
  }
  return rc;
}

RVec sort_rearrange(const RVec& v, SortDirection direction) {
  RVec out = v;
  if (direction == SortDirection::Up) {
    std::sort(out.begin(), out.end());
  } else {
    std::sort(out.begin(), out.end(), std::greater<>());
  }
  return out;
}

double paired_sum(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  std::vector<double> terms(static_cast<std::size_t>(a.size()));
  for (Index i = 0; i < a.size(); ++i) terms[static_cast<std::size_t>(i)] = a(i) * b(i);
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

Mat gen_permutation(int dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::BadRange, "dim must be >= 1");
  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = dim - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  Mat p = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

VectorPair::VectorPair(RVec a_in, RVec b_in, bool nonneg)
    : a(std::move(a_in)), b(std::move(b_in)), nonnegative(nonneg) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  if (nonnegative && ((a.size() && a.minCoeff() < 0.0) || (b.size() && b.minCoeff() < 0.0))) {
    throw Error(ErrorCode::NegativeEntry, "nonnegative pair has a negative entry");
  }
}

}  // namespace matineq
