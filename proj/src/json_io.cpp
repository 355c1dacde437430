#include "cohenlab/json_io.hpp"

#include <cmath>

namespace cohenlab {

namespace {

// JSON has no infinity; margins serialize as null with the flag set.
Json finiteOrNull(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

Json toJson(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json toJson(const CVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(toJson(v[i]));
  return a;
}

Json toJson(const RVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json toJson(const Exponent& p) {
  if (p.isInf()) return "inf";
  return p.value();
}

Json toJson(const MeasurableFunction& f) {
  return Json{{"weights", toJson(f.space.weights())}, {"values", toJson(f.values)}};
}

Json toJson(const MatrixOperator& A) {
  Json rows = Json::array();
  for (Index i = 0; i < A.size(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < A.size(); ++j) row.push_back(toJson(A.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", A.size()}, {"entries", std::move(rows)}};
}

Json toJson(const MultiplicationOperator& D) { return Json{{"symbol", toJson(D.symbol)}}; }

Json toJson(const ConvergenceReport& r) {
  return Json{{"value", r.value},
              {"iterations", r.iterations},
              {"residual", r.residual},
              {"converged", r.converged}};
}

Json toJson(const RadiusResult& r) {
  return Json{{"value", r.value},
              {"argTheta", r.argTheta},
              {"witness", toJson(r.witness)},
              {"method", radiusMethodName(r.method)},
              {"missBound", r.missBound}};
}

Json toJson(const InequalityReport& r) {
  return Json{{"name", r.name},
              {"lhs", r.lhs},
              {"rhsFactors", r.rhsFactors},
              {"rhsProduct", r.rhsProduct},
              {"marginRatio", finiteOrNull(r.marginRatio)},
              {"infiniteMargin", r.infiniteMargin},
              {"satisfied", r.satisfied},
              {"tolerance", r.tolerance},
              {"witnesses", r.witnesses},
              {"functionalsUsed", r.functionalsUsed},
              {"warnings", r.warnings},
              {"extras", r.extras}};
}

Json toJson(const GoldenValue& g) {
  return Json{{"name", g.name},
              {"computed", g.computed},
              {"expected", g.expected},
              {"tolerance", g.tolerance},
              {"pass", g.pass}};
}

Json toJson(const ReplicationResult& r) {
  Json constants = Json::array();
  for (const auto& c : r.constants) constants.push_back(toJson(c));
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(toJson(rep));
  return Json{{"constants", std::move(constants)},
              {"reports", std::move(reports)},
              {"allMatch", r.allMatch}};
}

Json toJson(const FuzzConfig& c) {
  return Json{{"seed", c.seed},
              {"trials", c.trials},
              {"dimRange", Json::array({c.dimMin, c.dimMax})},
              {"entryScale", c.entryScale},
              {"diagonalLogRange", c.diagonalLogRange},
              {"density", c.density},
              {"m", c.m},
              {"p", toJson(c.p)},
              {"tolerance", c.tolerance},
              {"shapes", c.shapes == ShapeMix::Mixed ? "mixed" : "uniform"}};
}

Json toJson(const FuzzResult& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"trialIndex", v.trialIndex}, {"report", toJson(v.report)}});
  Json out{{"suite", r.suite},
           {"trialsRun", r.trialsRun},
           {"skipped", r.skipped},
           {"violations", std::move(violations)},
           {"minMarginRatio", finiteOrNull(r.minMarginRatio)},
           {"argMin", r.argMin},
           {"wallTime", r.wallTime},
           {"crossChecks", r.crossChecks},
           {"crossCheckMaxError", r.crossCheckMaxError},
           {"canonicalTrials", r.canonicalTrials},
           {"canonicalViolations", r.canonicalViolations}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Complex parseComplex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("expected a real number or an [re, im] pair");
}

CVector parseComplexVector(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of values");
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = parseComplex(j[i]);
  return v;
}

RVector parseRealVector(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of reals");
  RVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError("expected a real number");
    v[static_cast<Index>(i)] = j[i].get<double>();
  }
  return v;
}

Exponent parseExponent(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Inf" || s == "infinity") return Exponent::inf();
    throw InputError("unknown exponent string: " + s);
  }
  if (j.is_number()) return Exponent(j.get<double>());
  throw InputError("expected an exponent (number or \"inf\")");
}

MeasureSpace parseSpace(const Json& weights) { return MeasureSpace(parseRealVector(weights)); }

CMatrix parseMatrixEntries(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw InputError("matrix object must carry \"entries\"");
    rows = &j.at("entries");
  }
  if (!rows->is_array() || rows->empty()) throw InputError("matrix entries must be a non-empty array");
  const auto n = static_cast<Index>(rows->size());
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = (*rows)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw InputError("matrix must be square");
    for (Index k = 0; k < n; ++k) m(i, k) = parseComplex(row[static_cast<std::size_t>(k)]);
  }
  if (j.is_object() && j.contains("n") &&
      j.at("n").get<Index>() != n)
    throw InputError("matrix \"n\" field disagrees with entry count");
  return m;
}

MatrixOperator parseMatrixOperator(const Json& j, const MeasureSpace& space) {
  return {space, parseMatrixEntries(j)};
}

MultiplicationOperator parseMultiplicationOperator(const Json& j, const MeasureSpace& space) {
  const Json* sym = &j;
  if (j.is_object()) {
    if (!j.contains("symbol")) throw InputError("diagonal object must carry \"symbol\"");
    sym = &j.at("symbol");
  }
  return {space, parseComplexVector(*sym)};
}

MeasurableFunction parseMeasurableFunction(const Json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("values"))
    throw InputError("function object must carry \"weights\" and \"values\"");
  return {parseSpace(j.at("weights")), parseComplexVector(j.at("values"))};
}

FuzzConfig parseFuzzConfig(const Json& j) {
  FuzzConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("trials")) c.trials = j.at("trials").get<long>();
  if (j.contains("dimRange")) {
    c.dimMin = j.at("dimRange").at(0).get<int>();
    c.dimMax = j.at("dimRange").at(1).get<int>();
  }
  if (j.contains("entryScale")) c.entryScale = j.at("entryScale").get<double>();
  if (j.contains("diagonalLogRange"))
    c.diagonalLogRange = j.at("diagonalLogRange").get<double>();
  if (j.contains("density")) c.density = j.at("density").get<double>();
  if (j.contains("m")) c.m = j.at("m").get<int>();
  if (j.contains("p")) c.p = parseExponent(j.at("p"));
  if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
  if (j.contains("shapes"))
    c.shapes = j.at("shapes").get<std::string>() == "uniform" ? ShapeMix::Uniform
                                                              : ShapeMix::Mixed;
  return c;
}

std::string dumpJson(const Json& j) { return j.dump(2); }

}  // namespace cohenlab
