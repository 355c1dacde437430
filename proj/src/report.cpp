#include "cohenlab/report.hpp"

#include <limits>

namespace cohenlab {

InequalityReport makeReport(std::string name, double lhs, std::vector<double> factors,
                            std::vector<std::string> methods, double tolerance,
                            Json witnesses) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhsFactors = std::move(factors);
  r.functionalsUsed = std::move(methods);
  r.tolerance = tolerance;
  r.witnesses = std::move(witnesses);
  // Integer-power products are evaluated by repeated multiplication, so a
  // factor list of identical values reproduces the lhs bit-for-bit and the
  // all-identity degenerate case reports marginRatio == 1 exactly.
  double prod = 1.0;
  for (double f : r.rhsFactors) prod *= f;
  r.rhsProduct = prod;
  if (lhs < kTinyLhs) {
    r.infiniteMargin = true;
    r.marginRatio = std::numeric_limits<double>::infinity();
    r.satisfied = true;
  } else {
    r.infiniteMargin = false;
    r.marginRatio = prod / lhs;
    r.satisfied = r.marginRatio >= 1.0 - tolerance;
  }
  return r;
}

bool recomputeSatisfied(const InequalityReport& report) {
  if (report.lhs < kTinyLhs) return true;
  return report.rhsProduct / report.lhs >= 1.0 - report.tolerance;
}

}  // namespace cohenlab
