#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxcorr/linalg.hpp"
#include "maxcorr/random.hpp"
#include "test_helpers.hpp"

using namespace maxcorr;

namespace {

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_complex(dim, dim, rng);
  return 0.5 * (g + g.adjoint().eval());
}

}  // namespace

TEST_CASE("hermitian_eig on fixed matrices") {
  SUBCASE("identity") {
    const HermitianSpectrum s = hermitian_eig(identity(2));
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diagonal") {
    ComplexMatrix m(2, 2);
    m << 3, 0, 0, -1;
    const HermitianSpectrum s = hermitian_eig(m);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(s.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(s.eigenvectors(1, 1)) == doctest::Approx(1.0));
  }
  SUBCASE("pauli x: roots of lambda^2 - 1") {
    const HermitianSpectrum s = hermitian_eig(test_helpers::pauli_x());
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("rejects a visibly non-hermitian matrix") {
    ComplexMatrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
  }
  SUBCASE("rejects non-square input") {
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)),
                    DimensionMismatch);
  }
}

TEST_CASE("hermitian_eig reconstruction on random matrices") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = seeded_rng(7, seed);
    const int dim = 2 + static_cast<int>(seed % 5);
    const ComplexMatrix m = random_hermitian(dim, rng);
    const HermitianSpectrum s = hermitian_eig(m);
    const ComplexMatrix recon = s.eigenvectors *
                                s.eigenvalues.asDiagonal().toDenseMatrix() *
                                s.eigenvectors.adjoint();
    CHECK((m - recon).norm() <= 1e-10 * std::max(1.0, m.norm()));
    CHECK((s.eigenvectors.adjoint() * s.eigenvectors - identity(dim))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) {
      CHECK(s.eigenvalues[i - 1] >= s.eigenvalues[i]);
    }
  }
}

TEST_CASE("svd on fixed matrices") {
  SUBCASE("identity") {
    const SingularSpectrum s = svd(identity(2));
    CHECK(s.singular_values[0] == doctest::Approx(1.0));
    CHECK(s.singular_values[1] == doctest::Approx(1.0));
  }
  SUBCASE("symmetric 2x2 against the Rayleigh oracle") {
    // Singular values are |eigenvalues| = {1, 0.6}; the grid oracle checks
    // the top one independently of the decomposition.
    ComplexMatrix m(2, 2);
    m << 0.8, 0.2, 0.2, 0.8;
    const SingularSpectrum s = svd(m);
    CHECK(s.singular_values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.singular_values[1] == doctest::Approx(0.6).epsilon(1e-12));
    Eigen::Matrix2d real;
    real << 0.8, 0.2, 0.2, 0.8;
    CHECK(std::abs(test_helpers::rayleigh_sigma_max(real) -
                   s.singular_values[0]) <= 1e-8);
  }
  SUBCASE("rank-1 outer product") {
    std::mt19937_64 rng = seeded_rng(11);
    ComplexVector u = gaussian_complex(3, 1, rng).col(0);
    ComplexVector v = gaussian_complex(3, 1, rng).col(0);
    u /= u.norm();
    v /= v.norm();
    const SingularSpectrum s = svd(u * v.adjoint());
    CHECK(s.singular_values[0] == doctest::Approx(1.0));
    CHECK(s.singular_values[1] == doctest::Approx(0.0));
    CHECK(s.singular_values[2] == doctest::Approx(0.0));
  }
}

TEST_CASE("svd reconstruction on random matrices") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng = seeded_rng(13, seed);
    const int rows = 2 + static_cast<int>(seed % 4);
    const int cols = 2 + static_cast<int>((seed / 2) % 4);
    const ComplexMatrix m = gaussian_complex(rows, cols, rng);
    const SingularSpectrum s = svd(m);
    const ComplexMatrix recon =
        s.left_vectors *
        s.singular_values.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
        s.right_vectors.adjoint();
    CHECK((m - recon).norm() <= 1e-10 * std::max(1.0, m.norm()));
    for (Eigen::Index i = 1; i < s.singular_values.size(); ++i) {
      CHECK(s.singular_values[i - 1] >= s.singular_values[i]);
      CHECK(s.singular_values[i] >= 0.0);
    }
  }
}

TEST_CASE("psd_inverse_sqrt") {
  SUBCASE("diagonal") {
    ComplexMatrix m(2, 2);
    m << 4, 0, 0, 1;
    const ComplexMatrix inv = psd_inverse_sqrt(m);
    CHECK(inv(0, 0).real() == doctest::Approx(0.5));
    CHECK(inv(1, 1).real() == doctest::Approx(1.0));
  }
  SUBCASE("kernel is annihilated") {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, 0;
    const ComplexMatrix inv = psd_inverse_sqrt(m);
    CHECK(inv(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(inv(1, 1)) == doctest::Approx(0.0));
  }
  SUBCASE("scalar multiple of identity") {
    const ComplexMatrix inv = psd_inverse_sqrt(0.5 * identity(2));
    CHECK(approx_equal(inv, std::sqrt(2.0) * identity(2)));
  }
  SUBCASE("rejects indefinite input") {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -0.5;
    CHECK_THROWS_AS(psd_inverse_sqrt(m), NotPSD);
  }
  SUBCASE("sandwich recovers the support projector") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      std::mt19937_64 rng = seeded_rng(17, seed);
      const int dim = 3 + static_cast<int>(seed % 3);
      const int rank = 1 + static_cast<int>(seed % dim);
      const ComplexMatrix g = gaussian_complex(dim, rank, rng);
      const ComplexMatrix m = g * g.adjoint();
      const ComplexMatrix inv = psd_inverse_sqrt(m);
      const ComplexMatrix projector = support_projector(m);
      CHECK((inv * m * inv - projector).norm() <= 1e-8);
    }
  }
}

TEST_CASE("frobenius_inner") {
  CHECK(frobenius_inner(identity(2), identity(2)).real() ==
        doctest::Approx(2.0));
  ComplexMatrix e11 = ComplexMatrix::Zero(2, 2);
  e11(0, 0) = 1;
  ComplexMatrix e22 = ComplexMatrix::Zero(2, 2);
  e22(1, 1) = 1;
  CHECK(std::abs(frobenius_inner(e11, e22)) == doctest::Approx(0.0));
  CHECK(frobenius_inner(test_helpers::pauli_x(), test_helpers::pauli_x())
            .real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(frobenius_inner(identity(2), identity(3)),
                  DimensionMismatch);
}

TEST_CASE("trace_norm") {
  CHECK(trace_norm(identity(5)) == doctest::Approx(5.0));
  // Any density matrix has trace norm 1.
  std::mt19937_64 rng = seeded_rng(23);
  const ComplexMatrix g = gaussian_complex(4, 4, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  CHECK(trace_norm(rho) == doctest::Approx(1.0));
  // Difference of orthogonal pure states has eigenvalues +-1.
  ComplexMatrix diff = ComplexMatrix::Zero(2, 2);
  diff(0, 0) = 1;
  diff(1, 1) = -1;
  CHECK(trace_norm(diff) == doctest::Approx(2.0));
  // trace_norm dominates |tr|.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 r = seeded_rng(29, seed);
    const ComplexMatrix m = gaussian_complex(3, 3, r);
    CHECK(trace_norm(m) >= std::abs(m.trace()) - 1e-12);
  }
}

TEST_CASE("kronecker products") {
  const ComplexMatrix k =
      kronecker(test_helpers::pauli_z(), test_helpers::pauli_x());
  CHECK(k.rows() == 4);
  CHECK(k(0, 1).real() == doctest::Approx(1.0));
  CHECK(k(2, 3).real() == doctest::Approx(-1.0));
  // Mixed-product identity on random inputs.
  std::mt19937_64 rng = seeded_rng(31);
  const ComplexMatrix a = gaussian_complex(2, 2, rng);
  const ComplexMatrix b = gaussian_complex(3, 3, rng);
  const ComplexMatrix c = gaussian_complex(2, 2, rng);
  const ComplexMatrix d = gaussian_complex(3, 3, rng);
  CHECK(approx_equal(kronecker(a, b) * kronecker(c, d),
                     kronecker(a * c, b * d), 1e-10, 1e-10));
}
