#pragma once

#include <string>
#include <vector>

#include "cohenlab/measure.hpp"
#include "cohenlab/operators.hpp"
#include "cohenlab/report.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

/// Which side the diagonal factors multiply on: D_i A or A D_i.
enum class Side { Left, Right };

std::string sideName(Side s);

// Each checker validates its hypotheses and throws HypothesisError naming
// the failed one.  The *Unchecked variants skip validation so hypothesis
// violations (the counterexample demonstrations) can still be evaluated.

/// r(A)^2 <= r(DA) r(D^-1 A) for nonnegative A and positive invertible D.
InequalityReport checkCohenSpectral(const MatrixOperator& A,
                                    const MultiplicationOperator& D,
                                    double tolerance = kDefaultTolerance);
InequalityReport checkCohenSpectralUnchecked(const MatrixOperator& A,
                                             const MultiplicationOperator& D,
                                             double tolerance = kDefaultTolerance);

/// r(A)^m <= prod r(D_i A) for positive symbols with product identity.
InequalityReport checkCohenSpectralMulti(const MatrixOperator& A,
                                         const std::vector<MultiplicationOperator>& Ds,
                                         double tolerance = kDefaultTolerance);
InequalityReport checkCohenSpectralMultiUnchecked(
    const MatrixOperator& A, const std::vector<MultiplicationOperator>& Ds,
    double tolerance = kDefaultTolerance);

/// ||A||^m <= prod ||D_i A|| (left) or prod ||A D_i|| (right) on L^p,
/// p in {1,2,inf}; symbols arbitrary complex with product identity.
InequalityReport checkNormMulti(const MatrixOperator& A,
                                const std::vector<MultiplicationOperator>& Ds, Exponent p,
                                Side side, double tolerance = kDefaultTolerance);
InequalityReport checkNormMultiUnchecked(const MatrixOperator& A,
                                         const std::vector<MultiplicationOperator>& Ds,
                                         Exponent p, Side side,
                                         double tolerance = kDefaultTolerance);

/// ||A||^2 <= ||DA|| ||D^-1 A|| for invertible D; delegates to the multi
/// checker with Ds = [D, D^-1].
InequalityReport checkNormCorollary(const MatrixOperator& A,
                                    const MultiplicationOperator& D, Exponent p, Side side,
                                    double tolerance = kDefaultTolerance);

/// w(A)^m <= prod w(D_i A) (or right products) for positive A and positive
/// symbols whose product dominates the identity.  Zero symbol entries are
/// flagged in the report warnings, not rejected.
InequalityReport checkNumradMulti(const MatrixOperator& A,
                                  const std::vector<MultiplicationOperator>& Ds, Side side,
                                  double tolerance = kDefaultTolerance);
InequalityReport checkNumradMultiUnchecked(const MatrixOperator& A,
                                           const std::vector<MultiplicationOperator>& Ds,
                                           Side side, double tolerance = kDefaultTolerance);

/// w(A)^2 <= w(DA) w(D^-1 A) for positive A and positive invertible D.
InequalityReport checkNumradCorollary(const MatrixOperator& A,
                                      const MultiplicationOperator& D, Side side,
                                      double tolerance = kDefaultTolerance);
InequalityReport checkNumradCorollaryUnchecked(const MatrixOperator& A,
                                               const MultiplicationOperator& D, Side side,
                                               double tolerance = kDefaultTolerance);

/// The mixed form w(A)^2 <= w(DA) w(A D^-1).  No expectation of
/// satisfaction: this inequality is false in general even under the
/// positivity hypotheses, and the checker exists to show it.
InequalityReport checkMixedNumrad(const MatrixOperator& A,
                                  const MultiplicationOperator& D,
                                  double tolerance = kDefaultTolerance);
InequalityReport checkMixedNumradUnchecked(const MatrixOperator& A,
                                           const MultiplicationOperator& D,
                                           double tolerance = kDefaultTolerance);

/// Rank-one case A = u (x) v:  r(A) = integral of u v,
/// r(DA) = integral of phi u v, r(D^-1 A) = integral of u v / phi, and the
/// spectral inequality reduces to Cauchy-Schwarz.  Cross-validates r(A)
/// against the spectral radius of the materialized kernel
/// A_ij = u_i v_j w_j (extras carry the comparison).
InequalityReport rankOneCohen(const MeasurableFunction& u, const MeasurableFunction& v,
                              const MeasurableFunction& phi,
                              double tolerance = kDefaultTolerance);

/// One asserted constant of a replication run.
struct GoldenValue {
  std::string name;
  double computed;
  double expected;
  double tolerance;
  bool pass;
};

struct ReplicationResult {
  std::vector<GoldenValue> constants;
  std::vector<InequalityReport> reports;
  bool allMatch;
};

/// A = [[1,1],[1,1]], D = diag(1,-1), counting measure: the case where the
/// norm inequality survives but the numerical-radius and spectral forms
/// fail without positivity of D.
ReplicationResult replicateExample1();

/// A = [[0,1],[0,0]], D = diag(d,1), d in (0,1): the family refuting the
/// mixed inequality w(A)^2 <= w(DA) w(A D^-1); its margin ratio equals d.
ReplicationResult replicateExample2(double d);

/// Re-runs the checker stored in a report's witnesses block; violation
/// witnesses must replay to the stored numbers.
InequalityReport replayReport(const Json& witnesses);

/// Batch roll-up {total, satisfied, violated, minMarginRatio}.
Json batchSummary(const std::vector<InequalityReport>& reports);

}  // namespace cohenlab
