#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohenlab/inequalities.hpp"
#include "cohenlab/measure.hpp"
#include "cohenlab/operators.hpp"
#include "cohenlab/report.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

/// How trial matrices are shaped.  "mixed" draws dense / sparse(0.2) /
/// rank-one / near-nilpotent in fixed proportion 40/30/15/15, where the
/// extremal behavior lives; "uniform" uses `density` directly.
enum class ShapeMix { Mixed, Uniform };

struct FuzzConfig {
  std::uint64_t seed = 1;
  long trials = 1000;
  int dimMin = 2;
  int dimMax = 6;
  double entryScale = 1.0;
  /// Symbols are drawn log-uniform in [e^-range, e^range].
  double diagonalLogRange = 1.0;
  double density = 1.0;  // used when shapes == Uniform
  /// Maximum factor count; each trial draws m uniformly in [2, m].
  int m = 2;
  Exponent p = Exponent(2.0);
  double tolerance = kDefaultTolerance;
  ShapeMix shapes = ShapeMix::Mixed;
};

struct FuzzViolation {
  long trialIndex;
  InequalityReport report;
};

struct FuzzResult {
  std::string suite;
  long trialsRun = 0;
  long skipped = 0;
  std::vector<FuzzViolation> violations;
  double minMarginRatio = std::numeric_limits<double>::infinity();
  /// Trial index and witnesses of the smallest finite margin; empty when
  /// every trial was skipped or had infinite margin.
  Json argMin = Json();
  double wallTime = 0.0;
  long crossChecks = 0;
  double crossCheckMaxError = 0.0;
  /// Mixed-region only: how many trials came from the canonical refuting
  /// family and how many of those violated (expected: all of them).
  long canonicalTrials = 0;
  long canonicalViolations = 0;
  std::string note;
};

enum class FuzzTarget { NormLeft, NormRight, NumradLeft, NumradRight, CohenMulti };

std::string fuzzTargetName(FuzzTarget t);

/// Entries zero with probability 1 - density, otherwise uniform in
/// (0, scale]; deterministic in streamSeed.
MatrixOperator generateNonnegativeOperator(std::uint64_t streamSeed, Index n,
                                           double density, double scale);

enum class FamilyConstraint { ProductIdentity, ProductDominatesIdentity, Unconstrained };

/// Log-uniform positive diagonal family of size m.  ProductIdentity pins the
/// last symbol to the pointwise inverse of the partial product;
/// ProductDominatesIdentity rescales the last symbol by max(1, 1/product) so
/// the product is >= 1 everywhere.
std::vector<MultiplicationOperator> generatePositiveDiagonalFamily(
    std::uint64_t streamSeed, const MeasureSpace& space, int m, double logRange,
    FamilyConstraint constraint);

/// Regression suite over a proved inequality; zero violations expected.
/// threads = 0 means one worker per hardware core.  Results are identical
/// for every worker count.
FuzzResult fuzzTheoremSuite(const FuzzConfig& config, FuzzTarget target, int threads = 1);

/// Evidence run on the L^2 question for r(A)^2 <= r(DA) r(D^-1 A) with
/// positive A and D.  On finite discrete spaces positive operators are
/// nonnegative matrices, so no violation can occur; the result is evidence
/// about the general question, not proof, and the report says so.
FuzzResult fuzzOpenQuestion(const FuzzConfig& config, int threads = 1);

/// Samples the mixed inequality w(A)^2 <= w(DA) w(A D^-1), which is
/// expected to FIND violations; one trial in five draws from the canonical
/// refuting family (strict upper shift, D = diag(d, 1)).
FuzzResult fuzzMixedViolationRegion(const FuzzConfig& config, int threads = 1);

}  // namespace cohenlab
