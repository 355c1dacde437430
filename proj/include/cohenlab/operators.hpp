#pragma once

#include <vector>

#include "cohenlab/measure.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

/// Dense operator on a weighted discrete space.  The kernel acts on raw
/// coordinates, (Af)_i = sum_j a_ij f_j; the measure enters only through
/// norms, inner products and adjoints.
struct MatrixOperator {
  MatrixOperator(MeasureSpace space, CMatrix entries);

  static MatrixOperator identity(const MeasureSpace& space);

  Index size() const { return entries.rows(); }

  MeasureSpace space;
  CMatrix entries;
};

/// Operator f -> d . f for a bounded symbol d; a diagonal matrix on
/// discrete spaces.
struct MultiplicationOperator {
  MultiplicationOperator(MeasureSpace space, CVector symbol);

  static MultiplicationOperator identity(const MeasureSpace& space);

  /// All symbol values real (|imag| <= tol) and >= -tol.
  bool isPositiveSymbol(double tol = 0.0) const;

  /// Symbol bounded away from zero: min_i |d_i| >= eps.
  bool isInvertible(double eps = 1e-12) const;

  /// Pointwise reciprocal symbol.  Requires isInvertible(eps).
  MultiplicationOperator inverse(double eps = 1e-12) const;

  /// Diagonal materialization as a dense operator.
  MatrixOperator toMatrix() const;

  MeasureSpace space;
  CVector symbol;
};

MeasurableFunction apply(const MatrixOperator& A, const MeasurableFunction& f);

/// Matrix product AB; the overloads realize the products DA and AD by row
/// and column scaling.
MatrixOperator compose(const MatrixOperator& A, const MatrixOperator& B);
MatrixOperator compose(const MultiplicationOperator& D, const MatrixOperator& A);
MatrixOperator compose(const MatrixOperator& A, const MultiplicationOperator& D);

/// Adjoint with respect to the weighted inner product:
/// <Af, g> = <f, A*g>; concretely W^-1 A^H W with W = diag(weights).
MatrixOperator adjoint(const MatrixOperator& A);

/// Entrywise nonnegativity, which on discrete spaces is equivalent to
/// mapping nonnegative functions to nonnegative ones.  tol = 0 is the exact
/// check; pass a small tol for float-contaminated inputs.
bool isPositiveOperator(const MatrixOperator& A, double tol = 0.0);

/// Pointwise product of the symbols D_1 ... D_m.
MultiplicationOperator productOfSymbols(const std::vector<MultiplicationOperator>& Ds);

/// All product values within tol of 1.
bool equalsIdentity(const MultiplicationOperator& D, double tol = 1e-12);

/// All product values real (|imag| <= tol) with real part >= 1 - tol.
bool dominatesIdentity(const MultiplicationOperator& D, double tol = 1e-12);

/// W^(1/2) A W^(-1/2).  Same spectrum as A; its standard-inner-product
/// singular values and numerical range equal A's weighted ones.
MatrixOperator similarityToUnweighted(const MatrixOperator& A);

/// Raw similarity image as a plain matrix (unit-weight context implied).
CMatrix similarityMatrix(const MatrixOperator& A);

}  // namespace cohenlab
