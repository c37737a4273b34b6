#include "maxcorr/harness.hpp"

#include <algorithm>
#include <cmath>

#include "maxcorr/random.hpp"

namespace maxcorr {

namespace {

void record(SuiteReport& report, std::uint64_t trial, double violation,
            const std::string& description) {
  report.max_violation = std::max(report.max_violation, violation);
  if (violation > report.tolerance) {
    report.failures.push_back(SuiteFailure{trial, description, violation});
  }
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Coefficients padded with zeros to a common length; the monotonicity claim
// is per index over the longer of the two spectra.
double max_coefficient_excess(const RealVector& out, const RealVector& in) {
  const Eigen::Index n = std::max(out.size(), in.size());
  double worst = -1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double o = i < out.size() ? out[i] : 0.0;
    const double v = i < in.size() ? in[i] : 0.0;
    worst = std::max(worst, o - v);
  }
  return worst;
}

JointDistribution random_block_distribution(std::mt19937_64& rng) {
  const int da = draw_int(rng, 2, 4);
  const int db = draw_int(rng, 2, 4);
  const int row_split = draw_int(rng, 1, da - 1);
  const int col_split = draw_int(rng, 1, db - 1);
  std::uniform_real_distribution<double> mass(0.1, 1.0);
  RealMatrix p = RealMatrix::Zero(da, db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < db; ++k) {
      const bool block0 = i < row_split && k < col_split;
      const bool block1 = i >= row_split && k >= col_split;
      if (block0 || block1) p(i, k) = mass(rng);
    }
  }
  p /= p.sum();
  return validate_distribution(p);
}

JointDistribution random_binary_distribution(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> diagonal(0.05, 1.0);
  std::uniform_real_distribution<double> off(0.0, 1.0);
  RealMatrix p(2, 2);
  p << diagonal(rng), off(rng), off(rng), diagonal(rng);
  p /= p.sum();
  return validate_distribution(p);
}

}  // namespace

double oracle_mu(const BipartiteState& rho, int restarts, int max_iters,
                 std::uint64_t seed) {
  const DensityMatrix rho_a = partial_trace(rho, Side::A);
  const DensityMatrix rho_b = partial_trace(rho, Side::B);
  const ComplexMatrix tilde =
      kronecker(identity(rho.dim_a), psd_inverse_sqrt(rho_b.matrix)) *
      rho.matrix *
      kronecker(psd_inverse_sqrt(rho_a.matrix), identity(rho.dim_b));
  const ComplexMatrix r = realign(tilde, rho.dim_a, rho.dim_b);

  ComplexVector u1(rho.dim_a * rho.dim_a);
  ComplexVector v1(rho.dim_b * rho.dim_b);
  {
    const ComplexMatrix sa = psd_sqrt(rho_a.matrix);
    const ComplexMatrix sb = psd_sqrt(rho_b.matrix);
    for (int i = 0; i < rho.dim_a; ++i)
      for (int j = 0; j < rho.dim_a; ++j) u1[i * rho.dim_a + j] = sa(i, j);
    for (int k = 0; k < rho.dim_b; ++k)
      for (int l = 0; l < rho.dim_b; ++l)
        v1[k * rho.dim_b + l] = std::conj(sb(k, l));
    u1 /= u1.norm();
    v1 /= v1.norm();
  }
  const auto project_left = [&](ComplexVector w) -> ComplexVector {
    return w - u1.dot(w) * u1;
  };
  const auto project_right = [&](ComplexVector w) -> ComplexVector {
    return w - v1.dot(w) * v1;
  };

  double best = 0.0;
  for (int rep = 0; rep < restarts; ++rep) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(rep));
    ComplexVector s =
        project_right(gaussian_complex(v1.size(), 1, rng).col(0));
    if (s.norm() < 1e-12) continue;
    s /= s.norm();
    double value = 0.0;
    for (int iter = 0; iter < max_iters; ++iter) {
      ComplexVector u = project_left(r * s);
      const double nu = u.norm();
      if (nu < 1e-15) {
        value = 0.0;
        break;
      }
      u /= nu;
      ComplexVector next = project_right(r.adjoint() * u);
      const double ns = next.norm();
      if (ns < 1e-15) {
        value = 0.0;
        break;
      }
      s = next / ns;
      if (std::abs(ns - value) <= 1e-12 * std::max(1.0, ns)) {
        value = ns;
        break;
      }
      value = ns;
    }
    best = std::max(best, value);
  }
  return best;
}

SuiteReport run_dpi_suite(int trials, int max_dim_a, int max_dim_b,
                          std::uint64_t seed) {
  SuiteReport report;
  report.suite_name = "dpi";
  report.trials = trials;
  report.tolerance = 1e-7;
  report.seed = seed;
  report.max_violation = -1.0;
  report.config = {{"max_dim_a", double(max_dim_a)},
                   {"max_dim_b", double(max_dim_b)},
                   {"tolerance", 1e-7}};

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(t));
    const int da = draw_int(rng, 2, max_dim_a);
    const int db = draw_int(rng, 2, max_dim_b);
    const int rank = draw_int(rng, 1, da * db);
    const BipartiteState rho = random_bipartite(da, db, rank, rng());
    const Side side = rng() % 2 == 0 ? Side::A : Side::B;
    const int dim_in = side == Side::A ? da : db;
    const int dim_out = draw_int(rng, 2, std::max(max_dim_a, max_dim_b));
    int env = draw_int(rng, 1, 3);
    while (dim_out * env < dim_in) ++env;
    const QuantumChannel channel = random_channel(dim_in, dim_out, env, rng());
    const BipartiteState sigma = apply_local(channel, rho, side);

    const RealVector in = schmidt_spectrum(rho).coefficients;
    const RealVector out = schmidt_spectrum(sigma).coefficients;
    record(report, t, max_coefficient_excess(out, in),
           "coefficient grew under local channel (dims " + std::to_string(da) +
               "x" + std::to_string(db) + ", side " +
               (side == Side::A ? "A" : "B") + ")");

    if (t % 10 == 9) {
      // Two-copy form: a channel on the B registers of rho (x) rho must not
      // push mu above mu(rho).
      const BipartiteState doubled = tensor_states(rho, rho);
      int env2 = 2;
      const int out2 = db;
      while (out2 * env2 < doubled.dim_b) ++env2;
      const QuantumChannel channel2 =
          random_channel(doubled.dim_b, out2, env2, rng());
      const BipartiteState sigma2 = apply_local(channel2, doubled, Side::B);
      const double mu_in = maximal_correlation(rho);
      const double mu_out = maximal_correlation(sigma2);
      record(report, t, mu_out - mu_in,
             "two-copy mu grew under local channel");
    }
  }
  return report;
}

SuiteReport run_tensorization_suite(int trials, std::uint64_t seed) {
  SuiteReport report;
  report.suite_name = "tensorization";
  report.trials = trials;
  report.tolerance = 1e-7;
  report.seed = seed;
  report.max_violation = -1.0;
  report.config = {{"tolerance", 1e-7}};

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(t));
    const BipartiteState rho =
        random_bipartite(2, 2, draw_int(rng, 1, 4), rng());
    const bool self_product = t % 5 == 4;
    const BipartiteState sigma =
        self_product ? rho : random_bipartite(2, 2, draw_int(rng, 1, 4), rng());
    const double mu_rho = maximal_correlation(rho);
    const double mu_sigma = maximal_correlation(sigma);
    const double mu_product = maximal_correlation(tensor_states(rho, sigma));
    record(report, t, std::abs(mu_product - std::max(mu_rho, mu_sigma)),
           self_product ? "self-product mu deviates from single-copy mu"
                        : "product mu deviates from max of factors");
  }

  // Contrast with mutual information, which doubles where mu stays put.
  const BipartiteState iso = isotropic_state(0.6);
  const BipartiteState iso_pair = tensor_states(iso, iso);
  report.config.emplace_back("mi_single", mutual_information(iso));
  report.config.emplace_back("mi_pair", mutual_information(iso_pair));
  report.config.emplace_back("mu_single", maximal_correlation(iso));
  report.config.emplace_back("mu_pair", maximal_correlation(iso_pair));
  return report;
}

SuiteReport run_extreme_suite(int trials, std::uint64_t seed) {
  SuiteReport report;
  report.suite_name = "extreme";
  report.trials = trials;
  report.tolerance = 0.0;  // violations are stored as excess over allowance
  report.seed = seed;
  report.max_violation = -1.0;
  report.config = {{"range_allowance", 1e-8},
                   {"dichotomy_allowance", 1e-6},
                   {"witness_cross_allowance", 1e-8},
                   {"lemma_allowance", 1e-10}};

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = seeded_rng(seed, static_cast<std::uint64_t>(t));

    // Range bounds on a random state.
    {
      const int da = draw_int(rng, 2, 3);
      const int db = draw_int(rng, 2, 3);
      const BipartiteState rho =
          random_bipartite(da, db, draw_int(rng, 1, da * db), rng());
      const double mu = mu_k(rho, 2);
      record(report, t, std::max(mu - 1.0, -mu) - 1e-8,
             "mu outside [0, 1] on random state");
    }

    // Pure-state dichotomy: entangled and product vectors alternate.
    {
      const int da = draw_int(rng, 2, 3);
      const int db = draw_int(rng, 2, 3);
      ComplexVector psi;
      if (t % 2 == 0) {
        psi = gaussian_complex(da * db, 1, rng).col(0);
      } else {
        const ComplexVector a = gaussian_complex(da, 1, rng).col(0);
        const ComplexVector b = gaussian_complex(db, 1, rng).col(0);
        psi = ComplexVector(da * db);
        for (int i = 0; i < da; ++i)
          for (int k = 0; k < db; ++k) psi[i * db + k] = a[i] * b[k];
      }
      psi /= psi.norm();
      const double dichotomy = pure_state_mu(psi, da, db);
      const double mu = maximal_correlation(pure_state(psi, da, db));
      record(report, t, std::abs(dichotomy - mu) - 1e-6,
             "pure-state dichotomy disagrees with spectral mu");
    }

    // Lemma 2 bound soundness on a random binary distribution.
    {
      const JointDistribution p = random_binary_distribution(rng);
      record(report, t, lemma_lower_bound(p) - binary_mu_exact(p) - 1e-10,
             "binary lower bound exceeds exact value");
    }

    // Witness round trip on a decomposable embedding.
    {
      const JointDistribution blocks = random_block_distribution(rng);
      const BipartiteState rho = embed_classical(blocks);
      const auto witness = common_data_witness(rho);
      if (!witness) {
        record(report, t, 1.0, "witness absent on decomposable embedding");
      } else {
        const double cross =
            witness->outcome.p(0, 1) + witness->outcome.p(1, 0);
        record(report, t, cross - 1e-8,
               "witness cross terms above allowance");
      }
    }
  }

  // Continuity near maximally entangled states: mu >= 1 - 9 eps whenever the
  // trace distance to tau is at most eps.
  for (const int d : {2, 3}) {
    for (const double eps : {0.01, 0.05, 0.1}) {
      std::mt19937_64 rng =
          seeded_rng(seed, 1000 + 10 * static_cast<std::uint64_t>(d) +
                               static_cast<std::uint64_t>(eps * 100));
      const BipartiteState tau =
          pure_state(maximally_entangled_ket(d), d, d);
      const BipartiteState junk = random_bipartite(d, d, d * d, rng());
      const double dist = trace_norm(tau.matrix - junk.matrix);
      // Slight backoff keeps the realized trace distance strictly below eps
      // after rounding.
      const double weight = (1.0 - 1e-9) * eps / std::max(1.0, dist);
      BipartiteState mixed = tau;
      mixed.matrix = (1.0 - weight) * tau.matrix + weight * junk.matrix;
      const double actual = trace_norm(mixed.matrix - tau.matrix);
      const double mu = maximal_correlation(mixed);
      record(report, 1000 + d, std::max(actual - eps, (1.0 - 9.0 * eps) - mu),
             "continuity bound violated at eps " + std::to_string(eps));
    }
  }

  // No witness may exist below the mu = 1 threshold.
  for (const double p : {0.5, 0.9, 0.95}) {
    const auto witness = common_data_witness(isotropic_state(p));
    record(report, 2000, witness.has_value() ? 1.0 : -1.0,
           "witness reported on isotropic state p = " + std::to_string(p));
  }
  return report;
}

}  // namespace maxcorr
