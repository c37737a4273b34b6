#pragma once

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maxcorr/linalg.hpp"
#include "maxcorr/states.hpp"

namespace test_helpers {

using maxcorr::ComplexMatrix;
using maxcorr::ComplexVector;

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << std::complex<double>(0, 0), std::complex<double>(0, -1),
      std::complex<double>(0, 1), std::complex<double>(0, 0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Independent largest-singular-value oracle for small real 2x2 matrices:
// maximize ||M v|| over the unit circle by golden-section refinement of a
// coarse grid. Never touches the decomposition code under test.
inline double rayleigh_sigma_max(const Eigen::Matrix2d& m) {
  const auto value = [&](double theta) {
    Eigen::Vector2d v(std::cos(theta), std::sin(theta));
    return (m * v).norm();
  };
  double best_theta = 0.0;
  double best = value(0.0);
  const int grid = 4096;
  for (int i = 1; i < grid; ++i) {
    const double theta = std::numbers::pi * i / grid;
    const double v = value(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  double lo = best_theta - std::numbers::pi / grid;
  double hi = best_theta + std::numbers::pi / grid;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double a = hi - gr * (hi - lo);
    const double b = lo + gr * (hi - lo);
    if (value(a) < value(b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  return value(0.5 * (lo + hi));
}

inline maxcorr::BipartiteState bell_state() {
  return maxcorr::isotropic_state(1.0);
}

}  // namespace test_helpers
