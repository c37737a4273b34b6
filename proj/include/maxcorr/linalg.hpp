#pragma once

#include <Eigen/Dense>
#include <complex>

#include "maxcorr/errors.hpp"

namespace maxcorr {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace defaults {
inline constexpr double atol = 1e-10;
inline constexpr double rtol = 1e-8;
// Relative eigenvalue cutoff separating a genuine kernel from rounding noise
// at the dimensions handled here (<= ~100).
inline constexpr double rank_tol = 1e-10;
}  // namespace defaults

// atol + rtol * scale comparison used throughout.
inline bool approx_equal(double a, double b, double atol = defaults::atol,
                         double rtol = defaults::rtol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= atol + rtol * scale;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double atol = defaults::atol, double rtol = defaults::rtol);

struct HermitianSpectrum {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // unitary, column i pairs with eigenvalues[i]
};

struct SingularSpectrum {
  RealVector singular_values;  // descending, nonnegative, min(rows, cols) long
  ComplexMatrix left_vectors;  // orthonormal columns
  ComplexMatrix right_vectors; // orthonormal columns; M = U diag(s) V^dagger
};

// Eigendecomposition of a hermitian matrix. The input is symmetrized as
// (M + M^dagger)/2 first; a hermiticity defect beyond
// tol * max(1, ||M||_F) throws NotHermitian.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m,
                                double tol = defaults::rtol);

SingularSpectrum svd(const ComplexMatrix& m);

// Moore-Penrose style inverse square root on the support: eigenvalues below
// rank_tol * lambda_max are treated as kernel and contribute zero.
// Eigenvalues below -rank_tol * lambda_max throw NotPSD.
ComplexMatrix psd_inverse_sqrt(const ComplexMatrix& m,
                               double rank_tol = defaults::rank_tol);

// Square root on the support, same kernel convention as psd_inverse_sqrt.
ComplexMatrix psd_sqrt(const ComplexMatrix& m,
                       double rank_tol = defaults::rank_tol);

// Orthogonal projector onto the support (eigenvalues above the cutoff).
ComplexMatrix support_projector(const ComplexMatrix& m,
                                double rank_tol = defaults::rank_tol);

// Hilbert-Schmidt inner product tr(M^dagger N).
std::complex<double> frobenius_inner(const ComplexMatrix& m,
                                     const ComplexMatrix& n);

double trace_norm(const ComplexMatrix& m);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix identity(int dim) {
  return ComplexMatrix::Identity(dim, dim);
}

}  // namespace maxcorr
