#pragma once

#include <cstdint>

#include "cohenlab/measure.hpp"
#include "cohenlab/operators.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

struct ConvergenceReport {
  double value = 0.0;
  long iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Exact induced norm on weighted L^p for p in {1, 2, inf}:
///   p = 1   max_j (sum_i w_i |a_ij|) / w_j          (closed form)
///   p = 2   sigma_max of W^(1/2) A W^(-1/2)         (power iteration)
///   p = inf max_i sum_j |a_ij|                      (closed form)
/// Other p throw UnsupportedExponentError; use operatorNormEstimate.
double operatorNorm(const MatrixOperator& A, Exponent p);

/// Lower-bound estimate of ||A||_p for 1 < p < inf by nonlinear power
/// iteration (alternating A with dual-norm gradient maps), with seeded
/// random restarts.  The value is a certified lower bound, never claimed
/// exact.
ConvergenceReport operatorNormEstimate(const MatrixOperator& A, Exponent p,
                                       int restarts = 8, std::uint64_t seed = 1);

/// Gelfand-formula estimate by repeated squaring of the normalized matrix.
/// Nilpotent matrices reach the exact-zero path in at most n squarings.
/// Non-convergence within 60 squarings is reported, not hidden.
ConvergenceReport spectralRadius(const MatrixOperator& A, double tol = 1e-9);

/// Perron root of an entrywise nonnegative operator by power iteration on
/// A + delta*I (delta = 1e-8 * max entry breaks periodicity).  Agrees with
/// spectralRadius on its domain.
ConvergenceReport perronRadius(const MatrixOperator& A, double tol = 1e-10,
                               long maxIterations = 100000);

namespace detail {

/// Largest singular value of a plain dense matrix by power iteration on
/// M^H M with the deterministic all-ones-plus-perturbation start.  `warm`
/// (optional, in/out) carries the dominant right singular vector across
/// related calls.
double sigmaMax(const CMatrix& M, double tol = 1e-12, long maxIterations = 100000,
                CVector* warm = nullptr);

}  // namespace detail

}  // namespace cohenlab
