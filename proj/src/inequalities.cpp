#include "cohenlab/inequalities.hpp"

#include <cmath>
#include <functional>

#include "cohenlab/json_io.hpp"
#include "cohenlab/numrad.hpp"
#include "cohenlab/spectral.hpp"

namespace cohenlab {

std::string sideName(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

// Margins this close to 1 get their functionals recomputed at tight
// tolerance before the verdict is recorded; the rule is a pure function of
// the inputs, so stored reports replay exactly.
constexpr double kRefineBand = 1e-4;

struct Valued {
  double value;
  std::string method;
};

// Spectral radius engine: Perron iteration on the nonnegative cone, Gelfand
// squaring everywhere else (and as fallback when Perron stalls on periodic
// or reducible kernels).
Valued radiusValue(const MatrixOperator& M, bool tight) {
  const double scale = M.entries.cwiseAbs().maxCoeff();
  if (isPositiveOperator(M, 1e-12 * std::max(1.0, scale))) {
    const auto rep = perronRadius(M, tight ? 1e-12 : 1e-10, tight ? 200000 : 30000);
    if (rep.converged) return {rep.value, "perron-iteration"};
    const auto g = spectralRadius(M, tight ? 1e-12 : 1e-9);
    return {g.value, "gelfand-squaring(perron-fallback)"};
  }
  const auto g = spectralRadius(M, tight ? 1e-12 : 1e-9);
  return {g.value, "gelfand-squaring"};
}

Valued normValue(const MatrixOperator& M, Exponent p, bool tight) {
  if (p.isInf()) return {operatorNorm(M, p), "closed-form-pinf"};
  if (p.value() == 1.0) return {operatorNorm(M, p), "closed-form-p1"};
  if (p.value() == 2.0) {
    if (tight) return {detail::sigmaMax(similarityMatrix(M), 1e-13, 1000000), "power-iteration-p2"};
    return {operatorNorm(M, p), "power-iteration-p2"};
  }
  throw UnsupportedExponentError(
      "norm checkers support p in {1, 2, inf}; use operatorNormEstimate for general p");
}

Valued numradValue(const MatrixOperator& M, bool tight) {
  const auto r = numericalRadius(M, 1e-12, tight ? 2880 : 720);
  return {r.value, tight ? "theta-sweep-2880" : "theta-sweep"};
}

double powBySquares(double base, int m) {
  double out = 1.0;
  for (int i = 0; i < m; ++i) out *= base;  // repeated product, bit-stable vs factors
  return out;
}

InequalityReport refineIfCritical(const std::function<InequalityReport(bool)>& compute) {
  InequalityReport first = compute(false);
  if (!first.infiniteMargin && std::abs(first.marginRatio - 1.0) < kRefineBand) {
    InequalityReport tight = compute(true);
    tight.extras["refined"] = true;
    return tight;
  }
  return first;
}

Json diagonalsJson(const std::vector<MultiplicationOperator>& Ds) {
  Json a = Json::array();
  for (const auto& d : Ds) a.push_back(toJson(d));
  return a;
}

Json baseWitnesses(const std::string& name, const MatrixOperator& A,
                   const std::vector<MultiplicationOperator>& Ds, double tolerance,
                   bool unchecked) {
  Json w = Json::object();
  w["inequality"] = name;
  w["weights"] = toJson(A.space.weights());
  w["matrix"] = toJson(A);
  w["diagonals"] = diagonalsJson(Ds);
  w["tolerance"] = tolerance;
  w["unchecked"] = unchecked;
  return w;
}

void requirePositiveOperator(const MatrixOperator& A, const char* what) {
  if (!isPositiveOperator(A))
    throw HypothesisError(std::string(what) + ": operator A must be positive "
                          "(entrywise nonnegative)");
}

void requirePositiveSymbol(const MultiplicationOperator& D, const char* what) {
  if (!D.isPositiveSymbol())
    throw HypothesisError(std::string(what) + ": multiplication operator must have a "
                          "positive symbol");
}

void requireInvertible(const MultiplicationOperator& D, const char* what) {
  if (!D.isInvertible())
    throw HypothesisError(std::string(what) + ": multiplication operator must be "
                          "invertible (symbol bounded away from zero)");
}

void requireSameSpace(const MatrixOperator& A, const std::vector<MultiplicationOperator>& Ds,
                      const char* what) {
  for (const auto& d : Ds)
    if (!(d.space == A.space)) throw InputError(std::string(what) + ": operand spaces differ");
}

std::vector<std::string> flagZeroSymbols(const std::vector<MultiplicationOperator>& Ds) {
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < Ds.size(); ++k)
    for (Index i = 0; i < Ds[k].symbol.size(); ++i)
      if (std::abs(Ds[k].symbol[i]) == 0.0)
        warnings.push_back("diagonal " + std::to_string(k) + " has zero symbol entry at atom " +
                           std::to_string(i));
  return warnings;
}

}  // namespace

// ---------------------------------------------------------------- spectral

InequalityReport checkCohenSpectralMultiUnchecked(
    const MatrixOperator& A, const std::vector<MultiplicationOperator>& Ds,
    double tolerance) {
  requireSameSpace(A, Ds, "cohen-multi");
  if (Ds.empty()) throw InputError("cohen-multi: need at least one diagonal");
  auto compute = [&](bool tight) {
    const auto lhsV = radiusValue(A, tight);
    std::vector<double> factors;
    std::vector<std::string> methods;
    for (const auto& d : Ds) {
      const auto f = radiusValue(compose(d, A), tight);
      factors.push_back(f.value);
      methods.push_back(f.method);
    }
    Json w = baseWitnesses(Ds.size() == 1 ? "cohen" : "cohen-multi", A, Ds, tolerance, true);
    InequalityReport rep =
        makeReport(w["inequality"].get<std::string>(), powBySquares(lhsV.value, int(Ds.size())),
                   std::move(factors), std::move(methods), tolerance, std::move(w));
    rep.extras["lhsMethod"] = lhsV.method;
    rep.extras["lhsBase"] = lhsV.value;
    return rep;
  };
  return refineIfCritical(compute);
}

InequalityReport checkCohenSpectralMulti(const MatrixOperator& A,
                                         const std::vector<MultiplicationOperator>& Ds,
                                         double tolerance) {
  requireSameSpace(A, Ds, "cohen-multi");
  requirePositiveOperator(A, "cohen-multi");
  for (const auto& d : Ds) requirePositiveSymbol(d, "cohen-multi");
  if (!equalsIdentity(productOfSymbols(Ds)))
    throw HypothesisError("cohen-multi: product of symbols must equal the identity");
  InequalityReport rep = checkCohenSpectralMultiUnchecked(A, Ds, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

InequalityReport checkCohenSpectralUnchecked(const MatrixOperator& A,
                                             const MultiplicationOperator& D,
                                             double tolerance) {
  requireInvertible(D, "cohen");
  InequalityReport rep =
      checkCohenSpectralMultiUnchecked(A, {D, D.inverse()}, tolerance);
  rep.name = "cohen";
  rep.witnesses["inequality"] = "cohen";
  rep.witnesses["diagonals"] = diagonalsJson({D});
  return rep;
}

InequalityReport checkCohenSpectral(const MatrixOperator& A, const MultiplicationOperator& D,
                                    double tolerance) {
  requirePositiveOperator(A, "cohen");
  requirePositiveSymbol(D, "cohen");
  requireInvertible(D, "cohen");
  InequalityReport rep = checkCohenSpectralUnchecked(A, D, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

// -------------------------------------------------------------------- norm

InequalityReport checkNormMultiUnchecked(const MatrixOperator& A,
                                         const std::vector<MultiplicationOperator>& Ds,
                                         Exponent p, Side side, double tolerance) {
  requireSameSpace(A, Ds, "norm");
  if (Ds.empty()) throw InputError("norm: need at least one diagonal");
  auto compute = [&](bool tight) {
    const auto lhsV = normValue(A, p, tight);
    std::vector<double> factors;
    std::vector<std::string> methods;
    for (const auto& d : Ds) {
      const MatrixOperator prod = side == Side::Left ? compose(d, A) : compose(A, d);
      const auto f = normValue(prod, p, tight);
      factors.push_back(f.value);
      methods.push_back(f.method);
    }
    Json w = baseWitnesses("norm", A, Ds, tolerance, true);
    w["p"] = toJson(p);
    w["side"] = sideName(side);
    InequalityReport rep =
        makeReport("norm", powBySquares(lhsV.value, int(Ds.size())), std::move(factors),
                   std::move(methods), tolerance, std::move(w));
    rep.extras["lhsMethod"] = lhsV.method;
    rep.extras["lhsBase"] = lhsV.value;
    rep.extras["p"] = toJson(p);
    rep.extras["side"] = sideName(side);
    return rep;
  };
  return refineIfCritical(compute);
}

InequalityReport checkNormMulti(const MatrixOperator& A,
                                const std::vector<MultiplicationOperator>& Ds, Exponent p,
                                Side side, double tolerance) {
  requireSameSpace(A, Ds, "norm");
  if (!p.isInf() && p.value() != 1.0 && p.value() != 2.0)
    throw UnsupportedExponentError(
        "norm: supported exponents are {1, 2, inf}; use operatorNormEstimate for general p");
  if (!equalsIdentity(productOfSymbols(Ds)))
    throw HypothesisError("norm: product of symbols must equal the identity");
  InequalityReport rep = checkNormMultiUnchecked(A, Ds, p, side, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

InequalityReport checkNormCorollary(const MatrixOperator& A, const MultiplicationOperator& D,
                                    Exponent p, Side side, double tolerance) {
  requireInvertible(D, "norm-corollary");
  InequalityReport rep = checkNormMulti(A, {D, D.inverse()}, p, side, tolerance);
  rep.name = "norm-corollary";
  rep.witnesses["inequality"] = "norm-corollary";
  rep.witnesses["diagonals"] = diagonalsJson({D});
  return rep;
}

// ---------------------------------------------------------- numerical radius

InequalityReport checkNumradMultiUnchecked(const MatrixOperator& A,
                                           const std::vector<MultiplicationOperator>& Ds,
                                           Side side, double tolerance) {
  requireSameSpace(A, Ds, "numrad");
  if (Ds.empty()) throw InputError("numrad: need at least one diagonal");
  auto compute = [&](bool tight) {
    const auto lhsV = numradValue(A, tight);
    std::vector<double> factors;
    std::vector<std::string> methods;
    for (const auto& d : Ds) {
      const MatrixOperator prod = side == Side::Left ? compose(d, A) : compose(A, d);
      const auto f = numradValue(prod, tight);
      factors.push_back(f.value);
      methods.push_back(f.method);
    }
    Json w = baseWitnesses("numrad", A, Ds, tolerance, true);
    w["side"] = sideName(side);
    InequalityReport rep =
        makeReport("numrad", powBySquares(lhsV.value, int(Ds.size())), std::move(factors),
                   std::move(methods), tolerance, std::move(w));
    rep.extras["lhsMethod"] = lhsV.method;
    rep.extras["lhsBase"] = lhsV.value;
    rep.extras["side"] = sideName(side);
    for (auto& warning : flagZeroSymbols(Ds)) rep.warnings.push_back(std::move(warning));
    return rep;
  };
  return refineIfCritical(compute);
}

InequalityReport checkNumradMulti(const MatrixOperator& A,
                                  const std::vector<MultiplicationOperator>& Ds, Side side,
                                  double tolerance) {
  requireSameSpace(A, Ds, "numrad");
  requirePositiveOperator(A, "numrad");
  for (const auto& d : Ds) requirePositiveSymbol(d, "numrad");
  if (!dominatesIdentity(productOfSymbols(Ds)))
    throw HypothesisError("numrad: product of symbols must dominate the identity");
  InequalityReport rep = checkNumradMultiUnchecked(A, Ds, side, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

InequalityReport checkNumradCorollaryUnchecked(const MatrixOperator& A,
                                               const MultiplicationOperator& D, Side side,
                                               double tolerance) {
  requireInvertible(D, "numrad-corollary");
  InequalityReport rep = checkNumradMultiUnchecked(A, {D, D.inverse()}, side, tolerance);
  rep.name = "numrad-corollary";
  rep.witnesses["inequality"] = "numrad-corollary";
  rep.witnesses["diagonals"] = diagonalsJson({D});
  return rep;
}

InequalityReport checkNumradCorollary(const MatrixOperator& A,
                                      const MultiplicationOperator& D, Side side,
                                      double tolerance) {
  requirePositiveOperator(A, "numrad-corollary");
  requirePositiveSymbol(D, "numrad-corollary");
  requireInvertible(D, "numrad-corollary");
  InequalityReport rep = checkNumradCorollaryUnchecked(A, D, side, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

InequalityReport checkMixedNumradUnchecked(const MatrixOperator& A,
                                           const MultiplicationOperator& D,
                                           double tolerance) {
  requireInvertible(D, "mixed");
  if (!(D.space == A.space)) throw InputError("mixed: operand spaces differ");
  auto compute = [&](bool tight) {
    const auto lhsV = numradValue(A, tight);
    const auto left = numradValue(compose(D, A), tight);
    const auto right = numradValue(compose(A, D.inverse()), tight);
    Json w = baseWitnesses("mixed", A, {D}, tolerance, true);
    InequalityReport rep = makeReport("mixed", powBySquares(lhsV.value, 2),
                                      {left.value, right.value}, {left.method, right.method},
                                      tolerance, std::move(w));
    rep.extras["lhsMethod"] = lhsV.method;
    rep.extras["lhsBase"] = lhsV.value;
    return rep;
  };
  return refineIfCritical(compute);
}

InequalityReport checkMixedNumrad(const MatrixOperator& A, const MultiplicationOperator& D,
                                  double tolerance) {
  requirePositiveOperator(A, "mixed");
  requirePositiveSymbol(D, "mixed");
  requireInvertible(D, "mixed");
  InequalityReport rep = checkMixedNumradUnchecked(A, D, tolerance);
  rep.witnesses["unchecked"] = false;
  return rep;
}

// ---------------------------------------------------------------- rank one

InequalityReport rankOneCohen(const MeasurableFunction& u, const MeasurableFunction& v,
                              const MeasurableFunction& phi, double tolerance) {
  if (!(u.space == v.space) || !(u.space == phi.space))
    throw InputError("rank-one: operand spaces differ");
  const Index n = u.space.size();
  for (Index i = 0; i < n; ++i) {
    if (u.values[i].imag() != 0.0 || u.values[i].real() < 0.0)
      throw InputError("rank-one: u must be nonnegative real");
    if (v.values[i].imag() != 0.0 || v.values[i].real() < 0.0)
      throw InputError("rank-one: v must be nonnegative real");
    if (phi.values[i].imag() != 0.0 || !(phi.values[i].real() > 0.0))
      throw InputError("rank-one: phi must be strictly positive real");
  }
  const RVector& w = u.space.weights();
  double rA = 0.0, rDA = 0.0, rDinvA = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double uv = u.values[i].real() * v.values[i].real();
    rA += w[i] * uv;
    rDA += w[i] * phi.values[i].real() * uv;
    rDinvA += w[i] * uv / phi.values[i].real();
  }

  Json witnesses = Json::object();
  witnesses["inequality"] = "rank-one";
  witnesses["weights"] = toJson(w);
  witnesses["u"] = toJson(u.values);
  witnesses["v"] = toJson(v.values);
  witnesses["phi"] = toJson(phi.values);
  witnesses["tolerance"] = tolerance;
  witnesses["unchecked"] = false;

  InequalityReport rep = makeReport("rank-one", rA * rA, {rDA, rDinvA},
                                    {"weighted-sum", "weighted-sum"}, tolerance,
                                    std::move(witnesses));

  // Kernel realizing Af = <f, v> u under the weighted pairing.
  CMatrix K(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      K(i, j) = Complex(u.values[i].real() * v.values[j].real() * w[j], 0.0);
  const auto cross = radiusValue(MatrixOperator(u.space, std::move(K)), true);
  rep.extras["lhsBase"] = rA;
  rep.extras["lhsMethod"] = "weighted-sum";
  rep.extras["materializedSpectralRadius"] = cross.value;
  rep.extras["materializedMethod"] = cross.method;
  const double err = std::abs(cross.value - rA);
  rep.extras["crossCheckError"] = err;
  rep.extras["crossCheckPassed"] = err <= 1e-8 * std::max(1.0, rA);
  return rep;
}

// -------------------------------------------------------------- replication

namespace {

GoldenValue golden(std::string name, double computed, double expected, double tol) {
  const bool pass = std::abs(computed - expected) <= tol;
  return {std::move(name), computed, expected, tol, pass};
}

}  // namespace

ReplicationResult replicateExample1() {
  const MeasureSpace space = MeasureSpace::counting(2);
  CMatrix a(2, 2);
  a << 1, 1, 1, 1;
  const MatrixOperator A(space, a);
  CVector d(2);
  d << Complex(1, 0), Complex(-1, 0);
  const MultiplicationOperator D(space, d);

  const MatrixOperator DA = compose(D, A);
  const MatrixOperator DinvA = compose(D.inverse(), A);
  CMatrix expectedDA(2, 2);
  expectedDA << 1, 1, -1, -1;

  ReplicationResult out;
  out.constants.push_back(
      golden("r(A)", radiusValue(A, true).value, 2.0, 1e-8));
  out.constants.push_back(golden("w(A)", numericalRadius(A).value, 2.0, 1e-8));
  out.constants.push_back(golden("norm2(A)", operatorNorm(A, 2.0), 2.0, 1e-8));
  out.constants.push_back(golden("max|DA - [[1,1],[-1,-1]]|",
                                 (DA.entries - expectedDA).cwiseAbs().maxCoeff(), 0.0, 0.0));
  out.constants.push_back(golden("max|D^-1 A - DA|",
                                 (DinvA.entries - DA.entries).cwiseAbs().maxCoeff(), 0.0, 0.0));
  out.constants.push_back(golden("norm2(DA)", operatorNorm(DA, 2.0), 2.0, 1e-8));
  out.constants.push_back(golden("w(DA)", numericalRadius(DA).value, 1.0, 1e-8));
  out.constants.push_back(golden("r(DA)", spectralRadius(DA).value, 0.0, 1e-6));

  InequalityReport numradRep = checkNumradCorollaryUnchecked(A, D, Side::Left);
  InequalityReport cohenRep = checkCohenSpectralUnchecked(A, D);
  out.constants.push_back(
      golden("numrad-corollary violated", numradRep.satisfied ? 1.0 : 0.0, 0.0, 0.0));
  out.constants.push_back(
      golden("cohen violated", cohenRep.satisfied ? 1.0 : 0.0, 0.0, 0.0));
  out.reports.push_back(std::move(numradRep));
  out.reports.push_back(std::move(cohenRep));

  out.allMatch = true;
  for (const auto& c : out.constants) out.allMatch = out.allMatch && c.pass;
  return out;
}

ReplicationResult replicateExample2(double d) {
  if (!(d > 0.0 && d < 1.0)) throw InputError("example2: d must lie in (0, 1)");
  const MeasureSpace space = MeasureSpace::counting(2);
  CMatrix a(2, 2);
  a << 0, 1, 0, 0;
  const MatrixOperator A(space, a);
  CVector sym(2);
  sym << Complex(d, 0), Complex(1, 0);
  const MultiplicationOperator D(space, sym);

  ReplicationResult out;
  out.constants.push_back(golden("w(A)", numericalRadius(A).value, 0.5, 1e-8));
  out.constants.push_back(
      golden("w(A D^-1)", numericalRadius(compose(A, D.inverse())).value, 0.5, 1e-8));
  out.constants.push_back(
      golden("w(DA)", numericalRadius(compose(D, A)).value, d / 2.0, 1e-8));

  InequalityReport mixed = checkMixedNumrad(A, D);
  out.constants.push_back(golden("mixed violated", mixed.satisfied ? 1.0 : 0.0, 0.0, 0.0));
  out.constants.push_back(golden("mixed marginRatio", mixed.marginRatio, d, 1e-6));
  out.reports.push_back(std::move(mixed));

  out.allMatch = true;
  for (const auto& c : out.constants) out.allMatch = out.allMatch && c.pass;
  return out;
}

// ------------------------------------------------------------------ replay

InequalityReport replayReport(const Json& w) {
  if (!w.is_object() || !w.contains("inequality"))
    throw InputError("replay: witnesses block lacks an inequality tag");
  const auto name = w.at("inequality").get<std::string>();
  const double tol = w.value("tolerance", kDefaultTolerance);
  const bool unchecked = w.value("unchecked", false);

  if (name == "holder") {
    const MeasureSpace space = parseSpace(w.at("weights"));
    std::vector<MeasurableFunction> fs;
    for (const auto& fj : w.at("functions")) fs.emplace_back(space, parseComplexVector(fj));
    std::vector<Exponent> ps;
    for (const auto& pj : w.at("exponents")) ps.push_back(parseExponent(pj));
    return holderCheck(fs, ps, parseExponent(w.at("r")), tol);
  }
  if (name == "rank-one") {
    const MeasureSpace space = parseSpace(w.at("weights"));
    return rankOneCohen({space, parseComplexVector(w.at("u"))},
                        {space, parseComplexVector(w.at("v"))},
                        {space, parseComplexVector(w.at("phi"))}, tol);
  }

  const MeasureSpace space = parseSpace(w.at("weights"));
  const MatrixOperator A = parseMatrixOperator(w.at("matrix"), space);
  std::vector<MultiplicationOperator> Ds;
  for (const auto& dj : w.at("diagonals")) Ds.push_back(parseMultiplicationOperator(dj, space));
  const Side side = w.value("side", std::string("left")) == "right" ? Side::Right : Side::Left;

  if (name == "cohen")
    return unchecked ? checkCohenSpectralUnchecked(A, Ds.at(0), tol)
                     : checkCohenSpectral(A, Ds.at(0), tol);
  if (name == "cohen-multi")
    return unchecked ? checkCohenSpectralMultiUnchecked(A, Ds, tol)
                     : checkCohenSpectralMulti(A, Ds, tol);
  if (name == "norm") {
    const Exponent p = parseExponent(w.at("p"));
    return unchecked ? checkNormMultiUnchecked(A, Ds, p, side, tol)
                     : checkNormMulti(A, Ds, p, side, tol);
  }
  if (name == "norm-corollary")
    return checkNormCorollary(A, Ds.at(0), parseExponent(w.at("p")), side, tol);
  if (name == "numrad")
    return unchecked ? checkNumradMultiUnchecked(A, Ds, side, tol)
                     : checkNumradMulti(A, Ds, side, tol);
  if (name == "numrad-corollary")
    return unchecked ? checkNumradCorollaryUnchecked(A, Ds.at(0), side, tol)
                     : checkNumradCorollary(A, Ds.at(0), side, tol);
  if (name == "mixed")
    return unchecked ? checkMixedNumradUnchecked(A, Ds.at(0), tol)
                     : checkMixedNumrad(A, Ds.at(0), tol);
  throw InputError("replay: unknown inequality name " + name);
}

Json batchSummary(const std::vector<InequalityReport>& reports) {
  long satisfied = 0;
  double minMargin = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    if (r.satisfied) ++satisfied;
    if (!r.infiniteMargin) minMargin = std::min(minMargin, r.marginRatio);
  }
  Json out{{"total", reports.size()},
           {"satisfied", satisfied},
           {"violated", static_cast<long>(reports.size()) - satisfied}};
  out["minMarginRatio"] = std::isfinite(minMargin) ? Json(minMargin) : Json(nullptr);
  return out;
}

}  // namespace cohenlab
