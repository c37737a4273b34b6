#pragma once

#include <stdexcept>

namespace maxcorr {

// Input/contract violations.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotHermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotPSD : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TraceNotOne : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotTracePreserving : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotNormalized : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroMarginal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroDiagonal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failures.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The top operator-Schmidt coefficient of a normalized state must be 1; a
// larger deviation signals a support or index-convention bug, not roundoff.
struct TopCoefficientDeviation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WitnessConstructionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace maxcorr
