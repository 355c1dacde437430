#pragma once

#include <cstdint>
#include <string>

#include "cohenlab/measure.hpp"
#include "cohenlab/operators.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

enum class RadiusMethod { ThetaSweep, ConeAscent, RandomSample };

std::string radiusMethodName(RadiusMethod m);

/// Outcome of a numerical-radius computation.  The witness is a unit vector
/// (weighted 2-norm) whose quadratic form attains the reported value within
/// 1e-6; every reported radius is certificate-backed from below.
struct RadiusResult {
  double value;
  double argTheta;  // in [0, 2*pi)
  MeasurableFunction witness;
  RadiusMethod method;
  /// Theta-sweep only: Lipschitz bound ||A||_2 * (grid spacing)/2 on how far
  /// the global maximum of g can sit above the best grid value.
  double missBound;
};

/// H(theta) = (e^{i theta} At + (e^{i theta} At)^H)/2 with
/// At = W^(1/2) A W^(-1/2); exactly Hermitian, returned on the unit-weight
/// space of the same size.
MatrixOperator hermitianPart(const MatrixOperator& A, double theta);

/// Largest eigenvalue of a Hermitian operator by power iteration on the
/// shifted matrix H + sI, s = max row sum; the shift makes the dominant
/// eigenvalue nonnegative.  Rejects non-Hermitian input (1e-12 check).
double lambdaMaxHermitian(const MatrixOperator& H, double tol = 1e-12);

/// w(A) = max_theta lambda_max(H(theta)): uniform grid over [0, 2*pi)
/// followed by golden-section refinement of the best bracket down to a
/// 1e-10 theta interval.  Deterministic tie-break on smaller theta.
RadiusResult numericalRadius(const MatrixOperator& A, double tol = 1e-12,
                             int gridPoints = 720);

/// Positive-cone form for positive operators: maximize <Af, f> over the
/// nonnegative part of the unit sphere by projected gradient ascent with
/// backtracking, multi-start from the all-ones vector plus seeded random
/// nonnegative starts.
RadiusResult numericalRadiusPositiveCone(const MatrixOperator& A, int restarts = 8,
                                         std::uint64_t seed = 1, double tol = 1e-10);

/// Max of |<Af, f>| over seeded random complex unit vectors; a guaranteed
/// lower bound on w(A).
RadiusResult numericalRadiusSampled(const MatrixOperator& A, long trials,
                                    std::uint64_t seed = 1);

}  // namespace cohenlab
