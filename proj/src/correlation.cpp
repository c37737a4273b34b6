#include "maxcorr/correlation.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace maxcorr {

namespace {

constexpr double kTopDeviationTol = 1e-6;
constexpr double kTieTol = 1e-10;        // exact-tie width for degeneracy
constexpr double kClusterGap = 1e-6;     // relative eigenvalue cluster gap

ComplexVector vec_rm(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      v[i * m.cols() + j] = m(i, j);
  return v;
}

ComplexMatrix unvec_rm(const ComplexVector& v, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// Everything the spectral routines share: marginal square roots, the tilde
// operator, its realignment, and the Schmidt data with the top pair pinned
// to (rho_A^{1/2}, rho_B^{1/2}) and the remainder taken from the deflated
// realignment. Keeping the top pair analytic makes the i >= 2 vectors
// orthogonal to it even when the top coefficient is degenerate.
struct SchmidtInternal {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix sqrt_a, sqrt_b;
  ComplexMatrix inv_sqrt_a, inv_sqrt_b;
  ComplexMatrix tilde;
  RealVector coefficients;
  std::vector<ComplexVector> left;   // u_i, vec-row of M_i
  std::vector<ComplexVector> right;  // v_i, conj(vec-row(N_i))
};

// Re-orthonormalize `v` against `basis`; falls back to canonical completion
// when the projection collapses (only reachable for zero-coefficient
// directions, where the SVD basis is arbitrary).
ComplexVector orthonormal_against(ComplexVector v,
                                  const std::vector<ComplexVector>& basis,
                                  Eigen::Index upto) {
  const auto project_out = [&](ComplexVector w) {
    for (Eigen::Index t = 0; t < upto; ++t) {
      w -= basis[t].dot(w) * basis[t];
    }
    return w;
  };
  v = project_out(std::move(v));
  if (v.norm() < 0.5) {
    for (Eigen::Index k = 0; k < basis.front().size(); ++k) {
      ComplexVector e = ComplexVector::Zero(basis.front().size());
      e[k] = 1.0;
      e = project_out(std::move(e));
      if (e.norm() > 0.5) {
        v = e;
        break;
      }
    }
  }
  return v / v.norm();
}

SchmidtInternal schmidt_internal(const BipartiteState& rho) {
  SchmidtInternal s;
  s.dim_a = rho.dim_a;
  s.dim_b = rho.dim_b;
  const DensityMatrix rho_a = partial_trace(rho, Side::A);
  const DensityMatrix rho_b = partial_trace(rho, Side::B);
  s.sqrt_a = psd_sqrt(rho_a.matrix);
  s.sqrt_b = psd_sqrt(rho_b.matrix);
  s.inv_sqrt_a = psd_inverse_sqrt(rho_a.matrix);
  s.inv_sqrt_b = psd_inverse_sqrt(rho_b.matrix);
  s.tilde = kronecker(identity(s.dim_a), s.inv_sqrt_b) * rho.matrix *
            kronecker(s.inv_sqrt_a, identity(s.dim_b));

  const ComplexMatrix r = realign(s.tilde, s.dim_a, s.dim_b);
  ComplexVector u1 = vec_rm(s.sqrt_a);
  ComplexVector v1 = vec_rm(s.sqrt_b).conjugate();
  u1 /= u1.norm();
  v1 /= v1.norm();

  const std::complex<double> pairing = u1.dot(r * v1);
  if (std::abs(pairing - 1.0) > kTopDeviationTol) {
    throw TopCoefficientDeviation(
        "schmidt_spectrum: top pairing deviates from 1 by " +
        std::to_string(std::abs(pairing - 1.0)));
  }

  // Deflate the known top pair and decompose the remainder.
  ComplexMatrix deflated = r;
  deflated -= u1 * (u1.adjoint() * r);
  deflated -= (deflated * v1) * v1.adjoint();
  const SingularSpectrum rest = svd(deflated);

  const Eigen::Index count =
      std::min<Eigen::Index>(s.dim_a * s.dim_a, s.dim_b * s.dim_b);
  s.coefficients.resize(count);
  s.left.resize(count);
  s.right.resize(count);
  s.coefficients[0] = std::abs(pairing);
  s.left[0] = u1;
  s.right[0] = v1;
  const double zero_cutoff =
      count > 1 ? 1e-12 * std::max(1.0, rest.singular_values[0]) : 0.0;
  for (Eigen::Index t = 0; t + 1 < count; ++t) {
    s.coefficients[t + 1] = rest.singular_values[t];
    s.left[t + 1] = rest.left_vectors.col(t);
    s.right[t + 1] = rest.right_vectors.col(t);
    if (rest.singular_values[t] <= zero_cutoff) {
      s.left[t + 1] = orthonormal_against(s.left[t + 1], s.left, t + 1);
      s.right[t + 1] = orthonormal_against(s.right[t + 1], s.right, t + 1);
    }
    // Deterministic phase: largest entry of the A-side vector real positive.
    Eigen::Index idx = 0;
    s.left[t + 1].cwiseAbs().maxCoeff(&idx);
    const std::complex<double> entry = s.left[t + 1][idx];
    if (std::abs(entry) > 0.0) {
      const std::complex<double> phase = std::conj(entry) / std::abs(entry);
      s.left[t + 1] *= phase;
      s.right[t + 1] *= phase;
    }
  }
  return s;
}

ComplexMatrix a_vector(const SchmidtInternal& s, Eigen::Index i) {
  return unvec_rm(s.left[i], s.dim_a, s.dim_a);
}

ComplexMatrix b_vector(const SchmidtInternal& s, Eigen::Index i) {
  return unvec_rm(s.right[i].conjugate(), s.dim_b, s.dim_b);
}

double mu_from(const SchmidtInternal& s) {
  if (s.coefficients.size() < 2) return 0.0;
  const double mu = s.coefficients[1];
  if (mu > 1.0 + 1e-8) {
    throw TopCoefficientDeviation("maximal_correlation: mu = " +
                                  std::to_string(mu) + " exceeds 1");
  }
  return std::clamp(mu, 0.0, 1.0);
}

std::vector<Eigen::Index> tie_set(const SchmidtInternal& s) {
  std::vector<Eigen::Index> ties;
  for (Eigen::Index i = 1; i < s.coefficients.size(); ++i) {
    if (std::abs(s.coefficients[i] - s.coefficients[1]) <= kTieTol) {
      ties.push_back(i);
    }
  }
  return ties;
}

// Searches the exact-tie singular subspace for a unit coefficient vector c
// making X(c) and Y(c) simultaneously hermitian. The condition is
// real-linear in (Re c, Im c); a null vector of the stacked deviation map
// gives the rotation. Falls back to the leading pair when the null space is
// empty at working precision.
OptimizerPair optimizers_from(const BipartiteState& rho,
                              const SchmidtInternal& s) {
  if (s.coefficients.size() < 2 || s.coefficients[1] <= 1e-12) {
    throw std::invalid_argument(
        "extract_optimizers: state has no positive maximal correlation");
  }
  const std::vector<Eigen::Index> ties = tie_set(s);
  const int m = static_cast<int>(ties.size());
  std::vector<ComplexMatrix> xs(m), ys(m);
  for (int t = 0; t < m; ++t) {
    xs[t] = s.inv_sqrt_a * a_vector(s, ties[t]).adjoint();
    ys[t] = s.inv_sqrt_b * b_vector(s, ties[t]);
  }

  const int na = s.dim_a * s.dim_a;
  const int nb = s.dim_b * s.dim_b;
  RealMatrix g(2 * (na + nb), 2 * m);
  const auto fill_column = [&](int col, const ComplexMatrix& dx,
                               const ComplexMatrix& dy) {
    const ComplexVector vx = vec_rm(dx);
    const ComplexVector vy = vec_rm(dy);
    g.block(0, col, na, 1) = vx.real();
    g.block(na, col, na, 1) = vx.imag();
    g.block(2 * na, col, nb, 1) = vy.real();
    g.block(2 * na + nb, col, nb, 1) = vy.imag();
  };
  const std::complex<double> minus_i(0.0, -1.0);
  for (int t = 0; t < m; ++t) {
    fill_column(t, xs[t] - xs[t].adjoint(), ys[t] - ys[t].adjoint());
    fill_column(m + t, minus_i * (xs[t] + xs[t].adjoint()),
                minus_i * (ys[t] + ys[t].adjoint()));
  }

  Eigen::JacobiSVD<RealMatrix> null_solver(g, Eigen::ComputeThinV);
  const RealVector sv = null_solver.singularValues();
  ComplexVector c = ComplexVector::Zero(m);
  if (sv[sv.size() - 1] <= 1e-7 * std::max(1.0, sv[0])) {
    const RealVector n = null_solver.matrixV().col(sv.size() - 1);
    for (int t = 0; t < m; ++t) {
      c[t] = std::complex<double>(n[t], n[m + t]);
    }
    c /= c.norm();
  } else {
    c[0] = 1.0;
  }

  OptimizerPair out;
  out.x_a = ComplexMatrix::Zero(s.dim_a, s.dim_a);
  out.y_b = ComplexMatrix::Zero(s.dim_b, s.dim_b);
  for (int t = 0; t < m; ++t) {
    out.x_a += std::conj(c[t]) * xs[t];
    out.y_b += std::conj(c[t]) * ys[t];
  }
  out.value =
      std::abs((rho.matrix * kronecker(out.x_a, out.y_b.adjoint())).trace());
  const double hx = (out.x_a - out.x_a.adjoint()).norm();
  const double hy = (out.y_b - out.y_b.adjoint()).norm();
  out.hermitian = hx <= 1e-6 * std::max(1.0, out.x_a.norm()) &&
                  hy <= 1e-6 * std::max(1.0, out.y_b.norm());
  out.degenerate = m > 1;
  return out;
}

}  // namespace

TildeOperator tilde_operator(const BipartiteState& rho) {
  const SchmidtInternal s = schmidt_internal(rho);
  return TildeOperator{rho.dim_a, rho.dim_b, s.tilde};
}

ComplexMatrix realign(const ComplexMatrix& z, int dim_a, int dim_b) {
  if (z.rows() != dim_a * dim_b || z.cols() != dim_a * dim_b) {
    throw DimensionMismatch("realign: operator size mismatch");
  }
  ComplexMatrix r(dim_a * dim_a, dim_b * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          r(i * dim_a + j, k * dim_b + l) = z(i * dim_b + k, j * dim_b + l);
  return r;
}

ComplexMatrix unrealign(const ComplexMatrix& r, int dim_a, int dim_b) {
  if (r.rows() != dim_a * dim_a || r.cols() != dim_b * dim_b) {
    throw DimensionMismatch("unrealign: matrix size mismatch");
  }
  ComplexMatrix z(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          z(i * dim_b + k, j * dim_b + l) = r(i * dim_a + j, k * dim_b + l);
  return z;
}

SchmidtSpectrum schmidt_spectrum(const BipartiteState& rho) {
  const SchmidtInternal s = schmidt_internal(rho);
  SchmidtSpectrum out;
  out.coefficients = s.coefficients;
  out.a_vectors.reserve(s.left.size());
  out.b_vectors.reserve(s.right.size());
  for (Eigen::Index i = 0; i < s.coefficients.size(); ++i) {
    out.a_vectors.push_back(a_vector(s, i));
    out.b_vectors.push_back(b_vector(s, i));
  }
  return out;
}

double maximal_correlation(const BipartiteState& rho) {
  return mu_from(schmidt_internal(rho));
}

double mu_k(const BipartiteState& rho, int k) {
  const SchmidtInternal s = schmidt_internal(rho);
  if (k < 1 || k > s.coefficients.size()) {
    throw OutOfRange("mu_k: k = " + std::to_string(k) + " outside spectrum");
  }
  return s.coefficients[k - 1];
}

OptimizerPair extract_optimizers(const BipartiteState& rho) {
  const SchmidtInternal s = schmidt_internal(rho);
  return optimizers_from(rho, s);
}

ComplexMatrix omega_superoperator(const ComplexMatrix& z, int dim_a,
                                  int dim_b) {
  if (z.rows() != dim_a * dim_b || z.cols() != dim_a * dim_b) {
    throw DimensionMismatch("omega_superoperator: operator size mismatch");
  }
  // Omega(|a><b|)[k, l] = <bk| Z |al>.
  ComplexMatrix omega(dim_b * dim_b, dim_a * dim_a);
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_a; ++b)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          omega(k * dim_b + l, a * dim_a + b) =
              z(b * dim_b + k, a * dim_b + l);
  return omega;
}

std::optional<CommonDataWitness> common_data_witness(const BipartiteState& rho,
                                                     double tol) {
  const SchmidtInternal s = schmidt_internal(rho);
  const double mu = mu_from(s);
  if (mu < 1.0 - tol) return std::nullopt;

  OptimizerPair opt = optimizers_from(rho, s);
  if (!opt.hermitian) {
    throw WitnessConstructionFailed(
        "common_data_witness: no hermitian optimizer representative found");
  }
  const ComplexMatrix x = 0.5 * (opt.x_a + opt.x_a.adjoint());
  const ComplexMatrix y = 0.5 * (opt.y_b + opt.y_b.adjoint());

  // mu = 1 forces rho (X (x) I) = rho (I (x) Y); verify before building
  // measurements from it.
  const ComplexMatrix lhs =
      rho.matrix * kronecker(x, identity(rho.dim_b));
  const ComplexMatrix rhs =
      rho.matrix * kronecker(identity(rho.dim_a), y);
  if ((lhs - rhs).norm() > 10.0 * std::sqrt(tol)) {
    throw WitnessConstructionFailed(
        "common_data_witness: optimizer intertwining residual " +
        std::to_string((lhs - rhs).norm()));
  }

  // Cluster the optimizer spectrum and project onto the leading cluster.
  const HermitianSpectrum xe = hermitian_eig(x);
  const double gap =
      kClusterGap * std::max(1.0, xe.eigenvalues.cwiseAbs().maxCoeff());
  std::vector<std::vector<Eigen::Index>> clusters{{0}};
  for (Eigen::Index i = 1; i < xe.eigenvalues.size(); ++i) {
    if (xe.eigenvalues[i - 1] - xe.eigenvalues[i] > gap) {
      clusters.push_back({});
    }
    clusters.back().push_back(i);
  }
  if (clusters.size() < 2) {
    throw WitnessConstructionFailed(
        "common_data_witness: optimizer spectrum has no gap");
  }
  std::vector<double> reps;
  reps.reserve(clusters.size());
  for (const auto& cluster : clusters) {
    double mean = 0.0;
    for (Eigen::Index i : cluster) mean += xe.eigenvalues[i];
    reps.push_back(mean / static_cast<double>(cluster.size()));
  }
  ComplexMatrix m_proj = ComplexMatrix::Zero(rho.dim_a, rho.dim_a);
  for (Eigen::Index i : clusters.front()) {
    m_proj.noalias() +=
        xe.eigenvectors.col(i) * xe.eigenvectors.col(i).adjoint();
  }

  // Lagrange polynomial q with q = 1 on the chosen cluster, 0 on the others,
  // applied spectrally to Y; N = q(Y)^2 clipped into [0, I].
  const auto q = [&](double t) {
    double value = 1.0;
    for (std::size_t r = 1; r < reps.size(); ++r) {
      value *= (t - reps[r]) / (reps[0] - reps[r]);
    }
    return value;
  };
  const HermitianSpectrum ye = hermitian_eig(y);
  ComplexMatrix n_eff = ComplexMatrix::Zero(rho.dim_b, rho.dim_b);
  for (Eigen::Index i = 0; i < ye.eigenvalues.size(); ++i) {
    const double qi = q(ye.eigenvalues[i]);
    const double clipped = std::clamp(qi * qi, 0.0, 1.0);
    if (qi * qi > 1.01 || qi * qi < -0.01) {
      throw WitnessConstructionFailed(
          "common_data_witness: effect spectrum far outside [0, 1]");
    }
    n_eff.noalias() +=
        clipped * ye.eigenvectors.col(i) * ye.eigenvectors.col(i).adjoint();
  }

  CommonDataWitness witness{make_binary_measurement(m_proj),
                            make_binary_measurement(n_eff),
                            JointDistribution{}};
  witness.outcome = measure_binary(rho, witness.on_a, witness.on_b);
  const double cross = witness.outcome.p(0, 1) + witness.outcome.p(1, 0);
  if (cross > 10.0 * tol) {
    throw WitnessConstructionFailed(
        "common_data_witness: cross terms " + std::to_string(cross) +
        " exceed 10x tolerance; numerically pathological input");
  }
  if (cross > tol) {
    throw WitnessConstructionFailed("common_data_witness: cross terms " +
                                    std::to_string(cross));
  }
  for (const double diag : {witness.outcome.p(0, 0), witness.outcome.p(1, 1)}) {
    if (diag <= tol || diag >= 1.0 - tol) {
      throw WitnessConstructionFailed(
          "common_data_witness: trivial outcome distribution");
    }
  }
  return witness;
}

double pure_state_mu(const ComplexVector& psi, int dim_a, int dim_b) {
  if (psi.size() != dim_a * dim_b) {
    throw DimensionMismatch("pure_state_mu: vector length mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > defaults::atol) {
    throw NotNormalized("pure_state_mu: norm " + std::to_string(psi.norm()));
  }
  ComplexMatrix coeff(dim_a, dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b) coeff(a, b) = psi[a * dim_b + b];
  const RealVector sv = svd(coeff).singular_values;
  const int rank = static_cast<int>((sv.array() > 1e-10).count());
  return rank <= 1 ? 0.0 : 1.0;
}

}  // namespace maxcorr
