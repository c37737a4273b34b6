#pragma once

#include <cstdint>

#include "maxcorr/classical.hpp"
#include "maxcorr/linalg.hpp"

namespace maxcorr {

// Composite basis convention, fixed globally: |i>_A |k>_B lives at index
// i * dim_b + k. Every reshaping routine in this project indexes against it.

struct DensityMatrix {
  int dim = 0;
  ComplexMatrix matrix;
};

struct BipartiteState {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix matrix;  // (dim_a * dim_b)^2, hermitian, PSD, trace 1

  int dim() const { return dim_a * dim_b; }
};

enum class Side { A, B };

// Checks hermiticity, positivity and unit trace within tol; symmetrizes and
// renormalizes small drift. Throws NotHermitian / NotPSD / TraceNotOne.
BipartiteState validate_density(const ComplexMatrix& matrix, int dim_a,
                                int dim_b, double tol = defaults::atol);

DensityMatrix partial_trace(const BipartiteState& rho, Side side);

// Tensor product with register regrouping: the result lives on (AA', BB'),
// i.e. both A-type registers come first in the composite index.
BipartiteState tensor_states(const BipartiteState& rho,
                             const BipartiteState& sigma);

// (1-p) I/4 + p |psi><psi| with psi = (|00> + |11>)/sqrt(2).
BipartiteState isotropic_state(double p);

// |psi><psi| for a unit vector on H_A (x) H_B.
BipartiteState pure_state(const ComplexVector& psi, int dim_a, int dim_b);

// Maximally entangled ket sum_i |ii>/sqrt(d).
ComplexVector maximally_entangled_ket(int dim);

// Diagonal state with entries p_ik in the composite basis.
BipartiteState embed_classical(const JointDistribution& dist);

// S(A) + S(B) - S(AB) in bits; eigenvalues below 1e-12 contribute zero.
double mutual_information(const BipartiteState& rho);

double von_neumann_entropy(const ComplexMatrix& rho);

// G G^dagger / tr(G G^dagger) for a seeded complex Gaussian
// (dim_a * dim_b) x rank matrix. Deterministic per seed.
BipartiteState random_bipartite(int dim_a, int dim_b, int rank,
                                std::uint64_t seed);

}  // namespace maxcorr
