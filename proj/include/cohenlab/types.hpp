#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cohenlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Malformed or inconsistent input data (dimension mismatch, bad values).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A checker hypothesis fails for the given operands.  The message names the
/// hypothesis so callers can distinguish "hypothesis fails" from "inequality
/// fails".
struct HypothesisError : InputError {
  using InputError::InputError;
};

/// Exact operator norms exist only for p in {1, 2, inf}; for other finite p
/// use operatorNormEstimate, which reports a lower bound.
struct UnsupportedExponentError : InputError {
  using InputError::InputError;
};

}  // namespace cohenlab
