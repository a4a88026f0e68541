#include "matineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace matineq {

double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double entry_scale(const Mat& m) { return std::max(1.0, max_abs(m)); }

void require_square_finite(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::NotSquare, std::string(what) + " is " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
}

Mat hermitian_part(const Mat& m) { return (m + m.adjoint()) * 0.5; }

double hermitian_defect(const Mat& m) { return max_abs(m - m.adjoint()); }

bool is_hermitian(const Mat& m, double tol) {
  return m.rows() == m.cols() && hermitian_defect(m) <= tol * entry_scale(m);
}

double normality_defect(const Mat& z) {
  const double s = entry_scale(z);
  return max_abs(z.adjoint() * z - z * z.adjoint()) / (s * s);
}

bool is_normal(const Mat& z, double tol) { return normality_defect(z) <= tol; }

double commutator_defect(const Mat& a, const Mat& b) {
  return max_abs(a * b - b * a) / (entry_scale(a) * entry_scale(b));
}

ComplexMatrix::ComplexMatrix(Mat m) : m_(std::move(m)) { require_square_finite(m_); }

HermitianMatrix::HermitianMatrix(const Mat& m, const Tolerances& tol) {
  require_square_finite(m);
  const double defect = hermitian_defect(m);
  if (defect > tol.hermitian * entry_scale(m)) {
    throw Error(ErrorCode::NotHermitian, "max|A - A*| = " + std::to_string(defect));
  }
  m_ = hermitian_part(m);
}

Mat SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

// Eigen returns ascending order; flip to descending.
SpectralDecomposition descending(const Eigen::SelfAdjointEigenSolver<Mat>& es) {
  SpectralDecomposition out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  return out;
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(a.mat());
  return descending(es);
}

RVec hermitian_eigenvalues(const Mat& a, const Tolerances& tol) {
  HermitianMatrix h(a, tol);
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mat(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

PsdMatrix::PsdMatrix(const Mat& m, bool require_strict, const Tolerances& tol) {
  HermitianMatrix h(m, tol);
  m_ = h.mat();
  spec_ = spectral_decompose(h);
  const double scale = entry_scale(m_);
  const double lo = min_eigenvalue();
  if (lo < -tol.psd * scale) {
    throw Error(ErrorCode::NotPsd, "smallest eigenvalue " + std::to_string(lo));
  }
  strict_ = lo >= tol.psd * scale;
  if (require_strict && !strict_) {
    throw Error(ErrorCode::NotPositiveDefinite, "smallest eigenvalue " + std::to_string(lo));
  }
}

PsdMatrix PsdMatrix::from_spectrum(const Mat& eigenvectors, const RVec& eigenvalues) {
  const Index n = eigenvalues.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return eigenvalues(i) > eigenvalues(j); });
  PsdMatrix out;
  out.spec_.eigenvalues.resize(n);
  out.spec_.eigenvectors.resize(eigenvectors.rows(), n);
  for (Index k = 0; k < n; ++k) {
    out.spec_.eigenvalues(k) = eigenvalues(order[static_cast<std::size_t>(k)]);
    out.spec_.eigenvectors.col(k) = eigenvectors.col(order[static_cast<std::size_t>(k)]);
  }
  out.m_ = hermitian_part(out.spec_.reconstruct());
  out.finish(kDefaultTolerances.psd);
  return out;
}

void PsdMatrix::finish(double psd_tol) {
  strict_ = min_eigenvalue() >= psd_tol * entry_scale(m_);
}

Projection::Projection(const Mat& m, const Tolerances& tol) {
  HermitianMatrix h(m, tol);
  m_ = h.mat();
  const double scale = entry_scale(m_);
  if (max_abs(m_ * m_ - m_) > tol.proj * scale) {
    throw Error(ErrorCode::NotProjection, "P^2 != P");
  }
  const double tr = m_.trace().real();
  rank_ = static_cast<int>(std::lround(tr));
  if (std::abs(tr - rank_) > tol.proj * scale) {
    throw Error(ErrorCode::NotProjection, "trace is not an integer");
  }
}

UnitVector::UnitVector(CVec v, const Tolerances& tol) : v_(std::move(v)) {
  if (!v_.allFinite()) throw Error(ErrorCode::NonFinite, "vector has NaN/Inf entries");
  const double n = v_.norm();
  if (std::abs(n - 1.0) > tol.unit) {
    throw Error(ErrorCode::NotUnit, "norm is " + std::to_string(n));
  }
}

UnitVector UnitVector::normalized(const CVec& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::NotUnit, "cannot normalize");
  UnitVector out;
  out.v_ = v / n;
  return out;
}

SingularValueProfile singular_values(const Mat& x) {
  Eigen::JacobiSVD<Mat> svd(x);
  return SingularValueProfile{svd.singularValues()};
}

PsdMatrix polar_absolute(const Mat& x) {
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeFullV);
  RVec s = RVec::Zero(x.cols());
  s.head(svd.singularValues().size()) = svd.singularValues();
  return PsdMatrix::from_spectrum(svd.matrixV(), s);
}

PsdMatrix matrix_power(const PsdMatrix& a, double p, const Tolerances& tol) {
  if (p == 1.0) return a;
  const auto& spec = a.spectrum();
  const double scale = entry_scale(a.mat());
  if (p < 0.0 && a.min_eigenvalue() < tol.psd * scale) {
    throw Error(ErrorCode::SingularPower,
                "negative power of a matrix with eigenvalue " + std::to_string(a.min_eigenvalue()));
  }
  RVec powered(spec.eigenvalues.size());
  for (Index i = 0; i < powered.size(); ++i) {
    powered(i) = std::pow(std::max(spec.eigenvalues(i), 0.0), p);
  }
  return PsdMatrix::from_spectrum(spec.eigenvectors, powered);
}

bool is_orthonormal_frame(const Mat& frame, double tol) {
  if (frame.cols() > frame.rows()) return false;
  const Mat gram = frame.adjoint() * frame;
  return max_abs(gram - Mat::Identity(frame.cols(), frame.cols())) <= tol;
}

Mat compression(const Mat& a, const Mat& frame, const Tolerances& tol) {
  if (frame.rows() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "frame rows do not match matrix dimension");
  }
  if (!is_orthonormal_frame(frame, tol.unit)) {
    throw Error(ErrorCode::NotOrthonormal, "frame columns are not orthonormal");
  }
  return frame.adjoint() * a * frame;
}

Mat diag_pinch(const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  out.diagonal() = x.diagonal();
  return out;
}

Projection support_projection(const Mat& x, const Tolerances& tol) {
  Eigen::JacobiSVD<Mat> svd(x, Eigen::ComputeFullV);
  const RVec& s = svd.singularValues();
  Index rank = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    for (Index j = 0; j < s.size(); ++j) {
      if (s(j) > tol.rank * s(0)) ++rank;
    }
  }
  const Mat v = svd.matrixV().leftCols(rank);
  return Projection(v * v.adjoint(), tol);
}

double spectral_radius(const Mat& x) {
  Eigen::ComplexEigenSolver<Mat> ces(x, false);
  return ces.eigenvalues().cwiseAbs().maxCoeff();
}

std::pair<double, double> extremal_eigenvalues(const PsdMatrix& z, bool nonzero_only,
                                               const Tolerances& tol) {
  const RVec& ev = z.spectrum().eigenvalues;
  const double a = ev(0);
  // roundoff can leave a zero eigenvalue slightly negative
  if (!nonzero_only) return {std::max(a, 0.0), std::max(ev(ev.size() - 1), 0.0)};
  if (!(a > 0.0)) throw Error(ErrorCode::ZeroMatrix, "no nonzero eigenvalue");
  double b = a;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol.rank * a) b = ev(i);
  }
  return {a, b};
}

Complex inner(const CVec& x, const CVec& y) { return x.dot(y); }

}  // namespace matineq
