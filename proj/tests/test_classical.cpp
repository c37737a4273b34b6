#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxcorr/classical.hpp"
#include "maxcorr/correlation.hpp"
#include "maxcorr/random.hpp"
#include "maxcorr/states.hpp"

using namespace maxcorr;

namespace {

JointDistribution make_dist(std::initializer_list<double> entries, int rows,
                            int cols) {
  RealMatrix p(rows, cols);
  int i = 0;
  for (const double e : entries) {
    p(i / cols, i % cols) = e;
    ++i;
  }
  return validate_distribution(p);
}

JointDistribution correlated_bits() {
  return make_dist({0.5, 0.0, 0.0, 0.5}, 2, 2);
}

JointDistribution worked_instance() {
  return make_dist({0.4, 0.1, 0.1, 0.4}, 2, 2);
}

JointDistribution random_binary(std::mt19937_64& rng, double min_diag) {
  std::uniform_real_distribution<double> diag(min_diag, 1.0);
  std::uniform_real_distribution<double> off(0.0, 1.0);
  RealMatrix p(2, 2);
  p << diag(rng), off(rng), off(rng), diag(rng);
  p /= p.sum();
  return validate_distribution(p);
}

}  // namespace

TEST_CASE("validate_distribution") {
  CHECK_NOTHROW(correlated_bits());
  RealMatrix bad(2, 2);
  bad << 0.5, 0.5, 0.5, 0.5;
  CHECK_THROWS_AS(validate_distribution(bad), NotNormalized);
  bad << 1.2, -0.2, 0.0, 0.0;
  CHECK_THROWS_AS(validate_distribution(bad), OutOfRange);
}

TEST_CASE("tilde_matrix") {
  SUBCASE("perfectly correlated bits give the identity") {
    CHECK((tilde_matrix(correlated_bits()) - RealMatrix::Identity(2, 2))
              .norm() <= 1e-12);
  }
  SUBCASE("independent distributions give a rank-1 matrix") {
    RealVector pa(2), pb(3);
    pa << 0.3, 0.7;
    pb << 0.2, 0.5, 0.3;
    const JointDistribution dist =
        validate_distribution(pa * pb.transpose());
    const RealMatrix expected =
        pa.cwiseSqrt() * pb.cwiseSqrt().transpose();
    CHECK((tilde_matrix(dist) - expected).norm() <= 1e-12);
  }
  SUBCASE("worked instance") {
    RealMatrix expected(2, 2);
    expected << 0.8, 0.2, 0.2, 0.8;
    CHECK((tilde_matrix(worked_instance()) - expected).norm() <= 1e-12);
  }
  SUBCASE("zero-marginal symbols give zero rows") {
    const JointDistribution dist = make_dist({0.5, 0.5, 0.0, 0.0}, 2, 2);
    CHECK(tilde_matrix(dist).row(1).norm() == 0.0);
  }
}

TEST_CASE("classical_maximal_correlation") {
  CHECK(classical_maximal_correlation(correlated_bits()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  RealVector pa(2), pb(2);
  pa << 0.3, 0.7;
  pb << 0.6, 0.4;
  CHECK(classical_maximal_correlation(
            validate_distribution(pa * pb.transpose())) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(classical_maximal_correlation(worked_instance()) ==
        doctest::Approx(0.6).epsilon(1e-12));
  // First singular value of the tilde matrix is always 1.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng = seeded_rng(101, seed);
    const JointDistribution p = random_binary(rng, 0.01);
    const RealVector sv = svd(tilde_matrix(p)).singular_values;
    CHECK(std::abs(sv[0] - 1.0) <= 1e-9);
    CHECK(classical_maximal_correlation(p) <= 1.0 + 1e-9);
  }
}

TEST_CASE("binary_mu_exact") {
  CHECK(binary_mu_exact(correlated_bits()) == doctest::Approx(1.0));
  CHECK(binary_mu_exact(make_dist({0.25, 0.25, 0.25, 0.25}, 2, 2)) ==
        doctest::Approx(0.0));
  // |0.16 - 0.01| / 0.25 = 0.6
  CHECK(binary_mu_exact(worked_instance()) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK_THROWS_AS(binary_mu_exact(make_dist({0.5, 0.5, 0.0, 0.0}, 2, 2)),
                  ZeroMarginal);
  // Determinant formula equals the singular-value route.
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng = seeded_rng(103, seed);
    const JointDistribution p = random_binary(rng, 0.01);
    CHECK(std::abs(binary_mu_exact(p) - classical_maximal_correlation(p)) <=
          1e-10);
  }
}

TEST_CASE("lemma_lower_bound") {
  SUBCASE("zero off-diagonal saturates at 1") {
    CHECK(lemma_lower_bound(correlated_bits()) == doctest::Approx(1.0));
    CHECK(binary_mu_exact(correlated_bits()) == doctest::Approx(1.0));
  }
  SUBCASE("worked instance: 1 - 0.1/0.16 - 0.02/0.16 = 0.25") {
    CHECK(lemma_lower_bound(worked_instance()) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lemma_lower_bound(worked_instance()) <=
          binary_mu_exact(worked_instance()));
  }
  SUBCASE("tighter instance") {
    const JointDistribution p = make_dist({0.45, 0.05, 0.05, 0.45}, 2, 2);
    CHECK(lemma_lower_bound(p) ==
          doctest::Approx(0.7283950617283951).epsilon(1e-12));
    CHECK(lemma_lower_bound(p) <= binary_mu_exact(p));
  }
  SUBCASE("zero diagonal is rejected") {
    CHECK_THROWS_AS(lemma_lower_bound(make_dist({0.0, 0.5, 0.5, 0.0}, 2, 2)),
                    ZeroDiagonal);
  }
  SUBCASE("sound on random distributions with positive diagonal") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      std::mt19937_64 rng = seeded_rng(107, seed);
      const JointDistribution p = random_binary(rng, 0.02);
      CHECK(lemma_lower_bound(p) <= binary_mu_exact(p) + 1e-10);
    }
  }
}

TEST_CASE("find_decomposition") {
  SUBCASE("perfectly correlated bits split into singleton blocks") {
    const auto partition = find_decomposition(correlated_bits());
    REQUIRE(partition.has_value());
    CHECK(partition->rows0 == std::vector<int>{0});
    CHECK(partition->rows1 == std::vector<int>{1});
    CHECK(partition->cols0 == std::vector<int>{0});
    CHECK(partition->cols1 == std::vector<int>{1});
  }
  SUBCASE("full support is connected") {
    CHECK_FALSE(is_decomposable(worked_instance()));
  }
  SUBCASE("3x3 block structure {0}x{0} and {1,2}x{1,2}") {
    const JointDistribution p = make_dist(
        {0.2, 0.0, 0.0, 0.0, 0.2, 0.2, 0.0, 0.2, 0.2}, 3, 3);
    const auto partition = find_decomposition(p);
    REQUIRE(partition.has_value());
    CHECK(partition->rows0 == std::vector<int>{0});
    CHECK(partition->rows1 == std::vector<int>{1, 2});
    CHECK(partition->cols0 == std::vector<int>{0});
    CHECK(partition->cols1 == std::vector<int>{1, 2});
  }
  SUBCASE("zero-marginal symbols do not disconnect the graph") {
    const JointDistribution p = make_dist(
        {0.4, 0.2, 0.0, 0.2, 0.2, 0.0, 0.0, 0.0, 0.0}, 3, 3);
    CHECK_FALSE(is_decomposable(p));
  }
  SUBCASE("decomposability tracks mu = 1 on random families") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      std::mt19937_64 rng = seeded_rng(109, seed);
      JointDistribution p = random_binary(rng, 0.05);
      if (seed % 2 == 0) {
        // Kill the off-diagonal to force a two-block support.
        RealMatrix q = p.p;
        q(0, 1) = q(1, 0) = 0.0;
        q /= q.sum();
        p = validate_distribution(q);
      }
      const bool split = is_decomposable(p);
      const bool saturated =
          classical_maximal_correlation(p) >= 1.0 - 1e-8;
      CHECK(split == saturated);
    }
  }
}

TEST_CASE("classical path agrees with the quantum embedding") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng = seeded_rng(113, seed);
    const int rows = 2 + static_cast<int>(seed % 3);
    const int cols = 2 + static_cast<int>((seed / 3) % 3);
    std::uniform_real_distribution<double> mass(0.01, 1.0);
    RealMatrix p(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) p(i, k) = mass(rng);
    p /= p.sum();
    const JointDistribution dist = validate_distribution(p);
    CHECK(std::abs(classical_maximal_correlation(dist) -
                   maximal_correlation(embed_classical(dist))) <= 1e-9);
  }
}
