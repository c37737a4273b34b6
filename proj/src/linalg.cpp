#include "maxcorr/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace maxcorr {

namespace {

void require_finite(const ComplexMatrix& m, const char* who) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(who) + ": matrix is not square");
  }
}

}  // namespace

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double atol,
                  double rtol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const double scale = std::max(a.norm(), b.norm());
  return (a - b).norm() <= atol + rtol * scale;
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m, double tol) {
  require_square(m, "hermitian_eig");
  require_finite(m, "hermitian_eig");
  const double defect = (m - m.adjoint()).norm();
  if (defect > tol * std::max(1.0, m.norm())) {
    throw NotHermitian("hermitian_eig: hermiticity defect " +
                       std::to_string(defect));
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");
  }
  // Eigen returns ascending order; flip to descending.
  HermitianSpectrum out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

SingularSpectrum svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  Eigen::JacobiSVD<ComplexMatrix> solver(m,
                                         Eigen::ComputeThinU |
                                             Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("svd: decomposition did not converge");
  }
  SingularSpectrum out;
  out.singular_values = solver.singularValues();
  out.left_vectors = solver.matrixU();
  out.right_vectors = solver.matrixV();
  return out;
}

namespace {

// Shared spectral-function core for the PSD operations.
ComplexMatrix psd_spectral_apply(const ComplexMatrix& m, double rank_tol,
                                 const char* who, double (*fn)(double)) {
  const HermitianSpectrum eig = hermitian_eig(m);
  const double lambda_max = std::max(0.0, eig.eigenvalues.maxCoeff());
  const double cutoff = rank_tol * lambda_max;
  if (eig.eigenvalues.minCoeff() < -std::max(cutoff, rank_tol)) {
    throw NotPSD(std::string(who) + ": eigenvalue " +
                 std::to_string(eig.eigenvalues.minCoeff()) +
                 " below tolerance");
  }
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda <= cutoff || lambda <= 0.0) continue;
    out.noalias() +=
        fn(lambda) * eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
  }
  return out;
}

}  // namespace

ComplexMatrix psd_inverse_sqrt(const ComplexMatrix& m, double rank_tol) {
  return psd_spectral_apply(m, rank_tol, "psd_inverse_sqrt",
                            [](double x) { return 1.0 / std::sqrt(x); });
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double rank_tol) {
  return psd_spectral_apply(m, rank_tol, "psd_sqrt",
                            [](double x) { return std::sqrt(x); });
}

ComplexMatrix support_projector(const ComplexMatrix& m, double rank_tol) {
  return psd_spectral_apply(m, rank_tol, "support_projector",
                            [](double) { return 1.0; });
}

std::complex<double> frobenius_inner(const ComplexMatrix& m,
                                     const ComplexMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) {
    throw DimensionMismatch("frobenius_inner: shape mismatch");
  }
  return (m.adjoint() * n).trace();
}

double trace_norm(const ComplexMatrix& m) {
  return svd(m).singular_values.sum();
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace maxcorr
