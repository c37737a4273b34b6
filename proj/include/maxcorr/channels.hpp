#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maxcorr/classical.hpp"
#include "maxcorr/states.hpp"

namespace maxcorr {

// CPTP map in Kraus form; the only channel representation used here.
struct QuantumChannel {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<ComplexMatrix> kraus;  // each dim_out x dim_in

  // sum_j K_j M K_j^dagger
  ComplexMatrix apply(const ComplexMatrix& m) const;
  // Adjoint under the trace pairing: sum_j K_j^dagger N K_j. Completely
  // positive and unital (maps I_out to I_in) because the channel is CPTP.
  ComplexMatrix apply_adjoint(const ComplexMatrix& n) const;
};

// Checks sum K^dagger K = I_in within tol; throws NotTracePreserving or
// ShapeMismatch.
QuantumChannel validate_channel(std::vector<ComplexMatrix> kraus,
                                double tol = 1e-9);

// I (x) Phi or Phi (x) I on a bipartite state; the untouched marginal is
// preserved exactly.
BipartiteState apply_local(const QuantumChannel& channel,
                           const BipartiteState& rho, Side side);

// Kraus set {K2_a K1_b} of the sequential composition second after first.
QuantumChannel compose(const QuantumChannel& second,
                       const QuantumChannel& first);

// Haar-distributed unitary via QR of a complex Gaussian with the R diagonal
// phase fixed.
ComplexMatrix haar_unitary(int dim, std::mt19937_64& rng);

// Kraus operators of a random CPTP map, read off a seeded Haar isometry
// dim_in -> dim_out * env_dim. Exactly env_dim Kraus operators.
QuantumChannel random_channel(int dim_in, int dim_out, int env_dim,
                              std::uint64_t seed);

// Effect operator of a binary POVM {E, I - E}.
struct BinaryMeasurement {
  ComplexMatrix effect;  // hermitian, 0 <= effect <= I
};

BinaryMeasurement make_binary_measurement(const ComplexMatrix& effect,
                                          double tol = defaults::atol);

// p_uv = tr(rho E_u (x) F_v) with E_0 = M, E_1 = I - M and likewise for N.
// Tiny negative probabilities (>= -1e-10) are clipped and the table is
// renormalized; larger negativity throws.
JointDistribution measure_binary(const BipartiteState& rho,
                                 const BinaryMeasurement& on_a,
                                 const BinaryMeasurement& on_b);

}  // namespace maxcorr
