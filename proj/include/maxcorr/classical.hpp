#pragma once

#include <optional>
#include <vector>

#include "maxcorr/linalg.hpp"

namespace maxcorr {

// Joint probability matrix over finite alphabets: entries nonnegative,
// total mass 1 within 1e-12.
struct JointDistribution {
  RealMatrix p;

  int rows() const { return static_cast<int>(p.rows()); }
  int cols() const { return static_cast<int>(p.cols()); }
  RealVector row_marginal() const { return p.rowwise().sum(); }
  RealVector col_marginal() const { return p.colwise().sum().transpose(); }
};

JointDistribution validate_distribution(const RealMatrix& p,
                                        double tol = 1e-12);

// Entries p_ik / sqrt(p_i p_k); symbols with zero marginal give zero entries.
RealMatrix tilde_matrix(const JointDistribution& dist);

// Second singular value of tilde_matrix (the first is always 1).
double classical_maximal_correlation(const JointDistribution& dist);

// Closed form for 2x2 distributions:
// |p00 p11 - p01 p10| / sqrt of the four marginal products.
double binary_mu_exact(const JointDistribution& dist);

// 1 - eps/(p00 p11) - 2 eps^2/(p00 p11) with eps = max(p01, p10); a valid
// lower bound on binary_mu_exact whenever the diagonal is positive.
double lemma_lower_bound(const JointDistribution& dist);

// Two-block partition of the alphabets witnessing decomposability.
struct Decomposition {
  std::vector<int> rows0, rows1;
  std::vector<int> cols0, cols1;
};

// Connected-component analysis of the support graph, restricted to symbols
// with positive marginal. Returns a two-block merge (first component vs the
// rest) when the graph splits, nullopt otherwise.
std::optional<Decomposition> find_decomposition(const JointDistribution& dist,
                                                double tol = 1e-12);

inline bool is_decomposable(const JointDistribution& dist,
                            double tol = 1e-12) {
  return find_decomposition(dist, tol).has_value();
}

}  // namespace maxcorr
