#include "maxcorr/states.hpp"

#include <cmath>

#include "maxcorr/random.hpp"

namespace maxcorr {

namespace {

// Trusted constructor for matrices already known to satisfy the invariants
// up to rounding; re-hermitizes and fixes the trace without spectral checks.
BipartiteState make_state_unchecked(ComplexMatrix m, int dim_a, int dim_b) {
  m = 0.5 * (m + m.adjoint().eval());
  m /= m.trace().real();
  return BipartiteState{dim_a, dim_b, std::move(m)};
}

}  // namespace

BipartiteState validate_density(const ComplexMatrix& matrix, int dim_a,
                                int dim_b, double tol) {
  if (dim_a < 1 || dim_b < 1) {
    throw OutOfRange("validate_density: dimensions must be positive");
  }
  const int d = dim_a * dim_b;
  if (matrix.rows() != d || matrix.cols() != d) {
    throw DimensionMismatch("validate_density: expected " + std::to_string(d) +
                            "x" + std::to_string(d) + " matrix");
  }
  if (!matrix.allFinite()) {
    throw std::invalid_argument("validate_density: non-finite entries");
  }
  const double defect = (matrix - matrix.adjoint()).norm();
  if (defect > tol * std::max(1.0, matrix.norm())) {
    throw NotHermitian("validate_density: hermiticity defect " +
                       std::to_string(defect));
  }
  ComplexMatrix sym = 0.5 * (matrix + matrix.adjoint());
  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw TraceNotOne("validate_density: trace " + std::to_string(trace));
  }
  sym /= trace;
  const HermitianSpectrum eig = hermitian_eig(sym, tol);
  if (eig.eigenvalues.minCoeff() < -tol) {
    throw NotPSD("validate_density: eigenvalue " +
                 std::to_string(eig.eigenvalues.minCoeff()));
  }
  return BipartiteState{dim_a, dim_b, std::move(sym)};
}

DensityMatrix partial_trace(const BipartiteState& rho, Side side) {
  const int da = rho.dim_a;
  const int db = rho.dim_b;
  if (side == Side::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        for (int k = 0; k < db; ++k) {
          out(i, j) += rho.matrix(i * db + k, j * db + k);
        }
      }
    }
    return DensityMatrix{da, std::move(out)};
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < db; ++k) {
    for (int l = 0; l < db; ++l) {
      for (int i = 0; i < da; ++i) {
        out(k, l) += rho.matrix(i * db + k, i * db + l);
      }
    }
  }
  return DensityMatrix{db, std::move(out)};
}

BipartiteState tensor_states(const BipartiteState& rho,
                             const BipartiteState& sigma) {
  const int da = rho.dim_a, db = rho.dim_b;
  const int da2 = sigma.dim_a, db2 = sigma.dim_b;
  const int dim_a = da * da2;
  const int dim_b = db * db2;
  ComplexMatrix out(dim_a * dim_b, dim_a * dim_b);
  // Composite index on the output: ((a, a'), (b, b')) with both A registers
  // grouped first, per the global convention.
  const auto index = [&](int a, int a2, int b, int b2) {
    return (a * da2 + a2) * dim_b + (b * db2 + b2);
  };
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int ap = 0; ap < da; ++ap)
        for (int bp = 0; bp < db; ++bp)
          for (int a2 = 0; a2 < da2; ++a2)
            for (int b2 = 0; b2 < db2; ++b2)
              for (int a2p = 0; a2p < da2; ++a2p)
                for (int b2p = 0; b2p < db2; ++b2p)
                  out(index(a, a2, b, b2), index(ap, a2p, bp, b2p)) =
                      rho.matrix(a * db + b, ap * db + bp) *
                      sigma.matrix(a2 * db2 + b2, a2p * db2 + b2p);
  return BipartiteState{dim_a, dim_b, std::move(out)};
}

ComplexVector maximally_entangled_ket(int dim) {
  ComplexVector psi = ComplexVector::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) {
    psi[i * dim + i] = 1.0 / std::sqrt(static_cast<double>(dim));
  }
  return psi;
}

BipartiteState isotropic_state(double p) {
  if (p < 0.0 || p > 1.0) {
    throw OutOfRange("isotropic_state: p = " + std::to_string(p));
  }
  const ComplexVector psi = maximally_entangled_ket(2);
  ComplexMatrix m = (1.0 - p) * 0.25 * ComplexMatrix::Identity(4, 4);
  m.noalias() += p * psi * psi.adjoint();
  return BipartiteState{2, 2, std::move(m)};
}

BipartiteState pure_state(const ComplexVector& psi, int dim_a, int dim_b) {
  if (psi.size() != dim_a * dim_b) {
    throw DimensionMismatch("pure_state: vector length mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > defaults::atol) {
    throw NotNormalized("pure_state: norm " + std::to_string(psi.norm()));
  }
  return BipartiteState{dim_a, dim_b, psi * psi.adjoint()};
}

BipartiteState embed_classical(const JointDistribution& dist) {
  const int da = dist.rows();
  const int db = dist.cols();
  ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < db; ++k) {
      m(i * db + k, i * db + k) = dist.p(i, k);
    }
  }
  return BipartiteState{da, db, std::move(m)};
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const HermitianSpectrum eig = hermitian_eig(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < 1e-12) continue;  // 0 log 0 := 0
    s -= lambda * std::log2(lambda);
  }
  return s;
}

double mutual_information(const BipartiteState& rho) {
  const DensityMatrix a = partial_trace(rho, Side::A);
  const DensityMatrix b = partial_trace(rho, Side::B);
  return von_neumann_entropy(a.matrix) + von_neumann_entropy(b.matrix) -
         von_neumann_entropy(rho.matrix);
}

BipartiteState random_bipartite(int dim_a, int dim_b, int rank,
                                std::uint64_t seed) {
  const int d = dim_a * dim_b;
  if (rank < 1 || rank > d) {
    throw OutOfRange("random_bipartite: rank " + std::to_string(rank) +
                     " not in [1, " + std::to_string(d) + "]");
  }
  std::mt19937_64 rng = seeded_rng(seed);
  const ComplexMatrix g = gaussian_complex(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  return make_state_unchecked(std::move(m), dim_a, dim_b);
}

}  // namespace maxcorr
