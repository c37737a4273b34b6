#include "maxcorr/channels.hpp"

#include <cmath>

#include "maxcorr/random.hpp"

namespace maxcorr {

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& m) const {
  if (m.rows() != dim_in || m.cols() != dim_in) {
    throw DimensionMismatch("QuantumChannel::apply: input dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_out, dim_out);
  for (const ComplexMatrix& k : kraus) {
    out.noalias() += k * m * k.adjoint();
  }
  return out;
}

ComplexMatrix QuantumChannel::apply_adjoint(const ComplexMatrix& n) const {
  if (n.rows() != dim_out || n.cols() != dim_out) {
    throw DimensionMismatch(
        "QuantumChannel::apply_adjoint: input dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_in, dim_in);
  for (const ComplexMatrix& k : kraus) {
    out.noalias() += k.adjoint() * n * k;
  }
  return out;
}

QuantumChannel validate_channel(std::vector<ComplexMatrix> kraus, double tol) {
  if (kraus.empty()) {
    throw ShapeMismatch("validate_channel: empty Kraus list");
  }
  const int dim_out = static_cast<int>(kraus.front().rows());
  const int dim_in = static_cast<int>(kraus.front().cols());
  ComplexMatrix sum = ComplexMatrix::Zero(dim_in, dim_in);
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw ShapeMismatch("validate_channel: inconsistent Kraus shapes");
    }
    if (!k.allFinite()) {
      throw std::invalid_argument("validate_channel: non-finite entries");
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double defect = (sum - ComplexMatrix::Identity(dim_in, dim_in)).norm();
  if (defect > tol * std::max(1.0, std::sqrt(double(dim_in)))) {
    throw NotTracePreserving("validate_channel: sum K^dagger K deviates by " +
                             std::to_string(defect));
  }
  return QuantumChannel{dim_in, dim_out, std::move(kraus)};
}

BipartiteState apply_local(const QuantumChannel& channel,
                           const BipartiteState& rho, Side side) {
  const int local_dim = side == Side::A ? rho.dim_a : rho.dim_b;
  if (channel.dim_in != local_dim) {
    throw DimensionMismatch("apply_local: channel expects dimension " +
                            std::to_string(channel.dim_in) + ", register has " +
                            std::to_string(local_dim));
  }
  const int out_a = side == Side::A ? channel.dim_out : rho.dim_a;
  const int out_b = side == Side::B ? channel.dim_out : rho.dim_b;
  const int d_out = out_a * out_b;
  ComplexMatrix out = ComplexMatrix::Zero(d_out, d_out);
  for (const ComplexMatrix& k : channel.kraus) {
    const ComplexMatrix lifted =
        side == Side::A ? kronecker(k, identity(rho.dim_b))
                        : kronecker(identity(rho.dim_a), k);
    out.noalias() += lifted * rho.matrix * lifted.adjoint();
  }
  out = 0.5 * (out + out.adjoint().eval());
  return BipartiteState{out_a, out_b, std::move(out)};
}

QuantumChannel compose(const QuantumChannel& second,
                       const QuantumChannel& first) {
  if (second.dim_in != first.dim_out) {
    throw DimensionMismatch("compose: inner dimensions disagree");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(second.kraus.size() * first.kraus.size());
  for (const ComplexMatrix& k2 : second.kraus) {
    for (const ComplexMatrix& k1 : first.kraus) {
      kraus.push_back(k2 * k1);
    }
  }
  return QuantumChannel{first.dim_in, second.dim_out, std::move(kraus)};
}

ComplexMatrix haar_unitary(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = gaussian_complex(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is exactly Haar.
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= mag > 0.0 ? d / mag : 1.0;
  }
  return q;
}

QuantumChannel random_channel(int dim_in, int dim_out, int env_dim,
                              std::uint64_t seed) {
  if (dim_in < 1 || dim_out < 1 || env_dim < 1) {
    throw OutOfRange("random_channel: dimensions must be positive");
  }
  if (dim_out * env_dim < dim_in) {
    throw OutOfRange("random_channel: no isometry into dimension " +
                     std::to_string(dim_out * env_dim));
  }
  std::mt19937_64 rng = seeded_rng(seed);
  const ComplexMatrix u = haar_unitary(dim_out * env_dim, rng);
  // Stinespring dilation: V = first dim_in columns; K_e = (I (x) <e|) V
  // with the composite row index o * env_dim + e.
  std::vector<ComplexMatrix> kraus(env_dim,
                                   ComplexMatrix::Zero(dim_out, dim_in));
  for (int e = 0; e < env_dim; ++e) {
    for (int o = 0; o < dim_out; ++o) {
      for (int j = 0; j < dim_in; ++j) {
        kraus[e](o, j) = u(o * env_dim + e, j);
      }
    }
  }
  return QuantumChannel{dim_in, dim_out, std::move(kraus)};
}

BinaryMeasurement make_binary_measurement(const ComplexMatrix& effect,
                                          double tol) {
  const HermitianSpectrum eig = hermitian_eig(effect, tol);
  if (eig.eigenvalues.minCoeff() < -tol ||
      eig.eigenvalues.maxCoeff() > 1.0 + tol) {
    throw OutOfRange("make_binary_measurement: effect spectrum outside [0,1]");
  }
  return BinaryMeasurement{0.5 * (effect + effect.adjoint().eval())};
}

JointDistribution measure_binary(const BipartiteState& rho,
                                 const BinaryMeasurement& on_a,
                                 const BinaryMeasurement& on_b) {
  if (on_a.effect.rows() != rho.dim_a || on_b.effect.rows() != rho.dim_b) {
    throw DimensionMismatch("measure_binary: effect dimension mismatch");
  }
  const ComplexMatrix e0 = on_a.effect;
  const ComplexMatrix e1 = identity(rho.dim_a) - on_a.effect;
  const ComplexMatrix f0 = on_b.effect;
  const ComplexMatrix f1 = identity(rho.dim_b) - on_b.effect;
  RealMatrix p(2, 2);
  const auto prob = [&](const ComplexMatrix& e, const ComplexMatrix& f) {
    return (rho.matrix * kronecker(e, f)).trace().real();
  };
  p(0, 0) = prob(e0, f0);
  p(0, 1) = prob(e0, f1);
  p(1, 0) = prob(e1, f0);
  p(1, 1) = prob(e1, f1);
  if (p.minCoeff() < -1e-10) {
    throw OutOfRange("measure_binary: negative probability " +
                     std::to_string(p.minCoeff()));
  }
  p = p.cwiseMax(0.0);
  p /= p.sum();
  return JointDistribution{std::move(p)};
}

}  // namespace maxcorr
