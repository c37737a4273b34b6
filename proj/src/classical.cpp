#include "maxcorr/classical.hpp"

#include <cmath>
#include <queue>

namespace maxcorr {

JointDistribution validate_distribution(const RealMatrix& p, double tol) {
  if (p.rows() < 1 || p.cols() < 1) {
    throw ShapeMismatch("validate_distribution: empty matrix");
  }
  if (!p.allFinite()) {
    throw std::invalid_argument("validate_distribution: non-finite entries");
  }
  if (p.minCoeff() < -tol) {
    throw OutOfRange("validate_distribution: negative probability " +
                     std::to_string(p.minCoeff()));
  }
  const double total = p.sum();
  if (std::abs(total - 1.0) > tol) {
    throw NotNormalized("validate_distribution: total mass " +
                        std::to_string(total));
  }
  JointDistribution out{p.cwiseMax(0.0)};
  out.p /= out.p.sum();
  return out;
}

RealMatrix tilde_matrix(const JointDistribution& dist) {
  const RealVector pa = dist.row_marginal();
  const RealVector pb = dist.col_marginal();
  RealMatrix out = RealMatrix::Zero(dist.rows(), dist.cols());
  for (int i = 0; i < dist.rows(); ++i) {
    if (pa[i] <= 0.0) continue;
    for (int k = 0; k < dist.cols(); ++k) {
      if (pb[k] <= 0.0) continue;
      out(i, k) = dist.p(i, k) / std::sqrt(pa[i] * pb[k]);
    }
  }
  return out;
}

double classical_maximal_correlation(const JointDistribution& dist) {
  const RealVector sv = svd(tilde_matrix(dist)).singular_values;
  return sv.size() >= 2 ? sv[1] : 0.0;
}

double binary_mu_exact(const JointDistribution& dist) {
  if (dist.rows() != 2 || dist.cols() != 2) {
    throw ShapeMismatch("binary_mu_exact: distribution is not 2x2");
  }
  const RealVector pa = dist.row_marginal();
  const RealVector pb = dist.col_marginal();
  const double denom = pa[0] * pa[1] * pb[0] * pb[1];
  if (denom <= 0.0) {
    throw ZeroMarginal("binary_mu_exact: zero marginal");
  }
  const double det = dist.p(0, 0) * dist.p(1, 1) - dist.p(0, 1) * dist.p(1, 0);
  return std::abs(det) / std::sqrt(denom);
}

double lemma_lower_bound(const JointDistribution& dist) {
  if (dist.rows() != 2 || dist.cols() != 2) {
    throw ShapeMismatch("lemma_lower_bound: distribution is not 2x2");
  }
  const double p00 = dist.p(0, 0);
  const double p11 = dist.p(1, 1);
  if (p00 <= 0.0 || p11 <= 0.0) {
    throw ZeroDiagonal("lemma_lower_bound: zero diagonal entry");
  }
  const double eps = std::max(dist.p(0, 1), dist.p(1, 0));
  return 1.0 - eps / (p00 * p11) - 2.0 * eps * eps / (p00 * p11);
}

std::optional<Decomposition> find_decomposition(const JointDistribution& dist,
                                                double tol) {
  const int ra = dist.rows();
  const int cb = dist.cols();
  const RealVector pa = dist.row_marginal();
  const RealVector pb = dist.col_marginal();

  // Node ids: rows are 0..ra-1, columns are ra..ra+cb-1. Zero-marginal
  // symbols carry no probability and are excluded from the graph.
  const int n = ra + cb;
  std::vector<int> component(n, -1);
  int num_components = 0;
  for (int start = 0; start < n; ++start) {
    const bool active = start < ra ? pa[start] > tol : pb[start - ra] > tol;
    if (!active || component[start] != -1) continue;
    const int id = num_components++;
    std::queue<int> frontier;
    frontier.push(start);
    component[start] = id;
    while (!frontier.empty()) {
      const int node = frontier.front();
      frontier.pop();
      if (node < ra) {
        for (int k = 0; k < cb; ++k) {
          if (dist.p(node, k) > tol && component[ra + k] == -1) {
            component[ra + k] = id;
            frontier.push(ra + k);
          }
        }
      } else {
        for (int i = 0; i < ra; ++i) {
          if (dist.p(i, node - ra) > tol && component[i] == -1) {
            component[i] = id;
            frontier.push(i);
          }
        }
      }
    }
  }

  if (num_components < 2) return std::nullopt;

  // Merge into two blocks: component 0 vs everything else.
  Decomposition out;
  for (int i = 0; i < ra; ++i) {
    if (component[i] == -1) continue;  // zero-marginal symbol, unassigned
    (component[i] == 0 ? out.rows0 : out.rows1).push_back(i);
  }
  for (int k = 0; k < cb; ++k) {
    if (component[ra + k] == -1) continue;
    (component[ra + k] == 0 ? out.cols0 : out.cols1).push_back(k);
  }
  return out;
}

}  // namespace maxcorr
