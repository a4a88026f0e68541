#pragma once

// Dense complex linear algebra used by every law: spectral calculus,
// singular values, compressions and the structured matrix types.

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "matineq/error.hpp"

namespace matineq {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Structure-check tolerances. All are relative to max(1, max|entry|).
struct Tolerances {
  double hermitian = 1e-9;
  double psd = 1e-9;
  double proj = 1e-9;
  double unit = 1e-9;
  double recon = 1e-8;
  /// Threshold separating "zero" from "nonzero" eigenvalues and singular
  /// values, relative to the largest one.
  double rank = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

double max_abs(const Mat& m);
/// max(1, max|entry|)
double entry_scale(const Mat& m);

/// Throws NotSquare / NonFinite.
void require_square_finite(const Mat& m, const char* what = "matrix");

Mat hermitian_part(const Mat& m);
double hermitian_defect(const Mat& m);
bool is_hermitian(const Mat& m, double tol = kDefaultTolerances.hermitian);

/// max|Z*Z - ZZ*| relative to max(1, max|Z|)^2.
double normality_defect(const Mat& z);
bool is_normal(const Mat& z, double tol = 1e-8);
/// max|AB - BA| relative to max(1,max|A|)*max(1,max|B|).
double commutator_defect(const Mat& a, const Mat& b);

/// A validated square, finite complex matrix.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Mat m);

  const Mat& mat() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  operator const Mat&() const noexcept { return m_; }

 private:
  Mat m_;
};

class HermitianMatrix {
 public:
  /// Validates the Hermitian invariant, then stores the exact Hermitian part.
  explicit HermitianMatrix(const Mat& m, const Tolerances& tol = kDefaultTolerances);

  const Mat& mat() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  operator const Mat&() const noexcept { return m_; }

 private:
  Mat m_;
};

struct SpectralDecomposition {
  RVec eigenvalues;  // descending
  Mat eigenvectors;  // columns, unitary

  Mat reconstruct() const;
};

struct SingularValueProfile {
  RVec values;  // descending, nonnegative
  Index size() const noexcept { return values.size(); }
  double operator[](Index j) const { return values(j); }
};

SpectralDecomposition spectral_decompose(const HermitianMatrix& a);

/// Descending eigenvalues of a matrix that must be Hermitian within tolerance.
RVec hermitian_eigenvalues(const Mat& a, const Tolerances& tol = kDefaultTolerances);

class PsdMatrix {
 public:
  explicit PsdMatrix(const Mat& m, bool require_strict = false,
                     const Tolerances& tol = kDefaultTolerances);

  static PsdMatrix from_spectrum(const Mat& eigenvectors, const RVec& eigenvalues);

  const Mat& mat() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  operator const Mat&() const noexcept { return m_; }

  const SpectralDecomposition& spectrum() const noexcept { return spec_; }
  double min_eigenvalue() const { return spec_.eigenvalues(spec_.eigenvalues.size() - 1); }
  double max_eigenvalue() const { return spec_.eigenvalues(0); }
  bool strict() const noexcept { return strict_; }

 private:
  PsdMatrix() = default;
  void finish(double psd_tol);

  Mat m_;
  SpectralDecomposition spec_;
  bool strict_ = false;
};

class Projection {
 public:
  explicit Projection(const Mat& m, const Tolerances& tol = kDefaultTolerances);

  const Mat& mat() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  int rank() const noexcept { return rank_; }
  operator const Mat&() const noexcept { return m_; }

 private:
  Mat m_;
  int rank_ = 0;
};

class UnitVector {
 public:
  explicit UnitVector(CVec v, const Tolerances& tol = kDefaultTolerances);
  /// Normalizes a nonzero vector.
  static UnitVector normalized(const CVec& v);

  const CVec& vec() const noexcept { return v_; }
  Index dim() const noexcept { return v_.size(); }

 private:
  UnitVector() = default;
  CVec v_;
};

SingularValueProfile singular_values(const Mat& x);

/// |X| = (X*X)^{1/2}, built from the SVD so that its eigenvalues are exactly
/// the singular values of X.
PsdMatrix polar_absolute(const Mat& x);

/// Spectral calculus A^p. Negative eigenvalue dust is clamped to zero first;
/// p < 0 requires A strictly positive (SingularPower otherwise).
PsdMatrix matrix_power(const PsdMatrix& a, double p, const Tolerances& tol = kDefaultTolerances);

/// F*AF for an orthonormal frame F (n x k).
Mat compression(const Mat& a, const Mat& frame, const Tolerances& tol = kDefaultTolerances);
bool is_orthonormal_frame(const Mat& frame, double tol = kDefaultTolerances.unit);

Mat diag_pinch(const Mat& x);

/// Projection onto the row space of X: smallest S with XS = X.
Projection support_projection(const Mat& x, const Tolerances& tol = kDefaultTolerances);

/// Maximum modulus of the (general complex) spectrum.
double spectral_radius(const Mat& x);

/// (a, b) = (largest, smallest) eigenvalue; with nonzero_only the smallest
/// eigenvalue above rank_tol * largest. Throws ZeroMatrix when none qualifies.
std::pair<double, double> extremal_eigenvalues(const PsdMatrix& z, bool nonzero_only,
                                               const Tolerances& tol = kDefaultTolerances);

/// <x, y> with the conjugate on the first argument.
Complex inner(const CVec& x, const CVec& y);

}  // namespace matineq
