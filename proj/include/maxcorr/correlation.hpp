#pragma once

#include <optional>
#include <vector>

#include "maxcorr/channels.hpp"
#include "maxcorr/classical.hpp"
#include "maxcorr/states.hpp"

namespace maxcorr {

// (I (x) rho_B^{-1/2}) rho_AB (rho_A^{-1/2} (x) I) with the inverse square
// roots taken on the supports. Generally non-hermitian.
struct TildeOperator {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix matrix;
};

// Operator Schmidt data of the tilde operator: descending coefficients
// mu_1 >= mu_2 >= ... with paired operator Schmidt vectors, orthonormal in
// the Hilbert-Schmidt inner product. mu_1 = 1 with (M_1, N_1) the marginal
// square roots; mu_2 is the maximal correlation.
struct SchmidtSpectrum {
  RealVector coefficients;               // length min(dim_a^2, dim_b^2)
  std::vector<ComplexMatrix> a_vectors;  // M_i on A
  std::vector<ComplexMatrix> b_vectors;  // N_i on B
};

// Observables attaining the maximal correlation: zero mean and unit second
// moment under the marginals, |tr(rho X (x) Y^dagger)| = value.
struct OptimizerPair {
  ComplexMatrix x_a;
  ComplexMatrix y_b;
  double value = 0.0;
  bool hermitian = false;   // hermitian representatives found within tolerance
  bool degenerate = false;  // mu_2 tied with mu_3; optimizer not unique
};

struct CommonDataWitness {
  BinaryMeasurement on_a;
  BinaryMeasurement on_b;
  JointDistribution outcome;  // 2x2, off-diagonals ~ 0
};

TildeOperator tilde_operator(const BipartiteState& rho);

// Realignment of an operator Z on H_A (x) H_B into a dim_a^2 x dim_b^2
// matrix: R[(i,j), (k,l)] = <ik| Z |jl> with row index i*dim_a + j over the
// A-side elementary operators and column index k*dim_b + l over the B side.
// Singular values of R are the operator Schmidt coefficients of Z.
ComplexMatrix realign(const ComplexMatrix& z, int dim_a, int dim_b);

// Inverse reshaping; realign and unrealign are mutually inverse bijections.
ComplexMatrix unrealign(const ComplexMatrix& r, int dim_a, int dim_b);

SchmidtSpectrum schmidt_spectrum(const BipartiteState& rho);

// mu(rho) = second Schmidt coefficient of the tilde operator, in [0, 1].
double maximal_correlation(const BipartiteState& rho);

// k-th Schmidt coefficient, 1-indexed; k = 1 gives 1, k = 2 gives mu.
double mu_k(const BipartiteState& rho, int k);

OptimizerPair extract_optimizers(const BipartiteState& rho);

// Matrix of the superoperator Omega_Z : L(H_A) -> L(H_B) defined by
// Z = sum_{i,j} |i><j| (x) Omega_Z(|j><i|), in the elementary-operator
// bases (column a*dim_a + b is the image of |a><b|, row-major on the
// output side). Its singular values equal those of realign(Z).
ComplexMatrix omega_superoperator(const ComplexMatrix& z, int dim_a,
                                  int dim_b);

// If mu(rho) >= 1 - tol, constructs local binary measurements with perfectly
// correlated nontrivial outcomes (projector from a spectral cluster of the
// hermitian optimizer on A, interpolating-polynomial image on B). Returns
// nullopt when mu < 1 - tol.
std::optional<CommonDataWitness> common_data_witness(const BipartiteState& rho,
                                                     double tol = 1e-6);

// 0 for product vectors, 1 for entangled ones (Schmidt rank above 1e-10).
double pure_state_mu(const ComplexVector& psi, int dim_a, int dim_b);

}  // namespace maxcorr
