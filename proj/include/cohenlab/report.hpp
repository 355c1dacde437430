#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohenlab {

using Json = nlohmann::json;

inline constexpr double kDefaultTolerance = 1e-9;

/// Below this the left side is treated as zero and the margin as infinite,
/// so nilpotent-radius cases never divide by ~0.
inline constexpr double kTinyLhs = 1e-12;

/// One checked instance of a multiplicative inequality  lhs <= prod(factors).
///
/// marginRatio is rhsProduct/lhs, the scale-free headline statistic; >= 1
/// means satisfied.  `satisfied` is recomputable from the stored fields:
///   lhs <  kTinyLhs  ->  infiniteMargin, satisfied
///   lhs >= kTinyLhs  ->  satisfied == (rhsProduct/lhs >= 1 - tolerance)
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  std::vector<double> rhsFactors;
  double rhsProduct = 1.0;
  double marginRatio = std::numeric_limits<double>::infinity();
  bool infiniteMargin = false;
  bool satisfied = false;
  double tolerance = kDefaultTolerance;
  Json witnesses = Json::object();
  std::vector<std::string> functionalsUsed;  // provenance, one per factor
  std::vector<std::string> warnings;
  Json extras = Json::object();
};

/// Assembles a report from the computed sides; factors and methods must be
/// aligned index-by-index.
InequalityReport makeReport(std::string name, double lhs, std::vector<double> factors,
                            std::vector<std::string> methods, double tolerance,
                            Json witnesses);

/// Re-derives `satisfied` from (lhs, rhsProduct, tolerance); used by tests to
/// confirm reports are self-consistent after a JSON round trip.
bool recomputeSatisfied(const InequalityReport& report);

}  // namespace cohenlab
