#pragma once

#include <string>

#include <json.hpp>

#include "cohenlab/fuzz.hpp"
#include "cohenlab/inequalities.hpp"
#include "cohenlab/measure.hpp"
#include "cohenlab/numrad.hpp"
#include "cohenlab/operators.hpp"
#include "cohenlab/report.hpp"
#include "cohenlab/spectral.hpp"
#include "cohenlab/types.hpp"

// JSON wire formats.  Complex values serialize as [re, im] pairs; on input
// the real shorthand x is accepted anywhere a pair is.  Exponents serialize
// as a number or the string "inf".

namespace cohenlab {

Json toJson(const Complex& z);
Json toJson(const CVector& v);
Json toJson(const RVector& v);
Json toJson(const Exponent& p);
Json toJson(const MeasurableFunction& f);       // {"weights": [...], "values": [...]}
Json toJson(const MatrixOperator& A);           // {"n": n, "entries": [[...], ...]}
Json toJson(const MultiplicationOperator& D);   // {"symbol": [...]}
Json toJson(const ConvergenceReport& r);
Json toJson(const RadiusResult& r);
Json toJson(const InequalityReport& r);
Json toJson(const GoldenValue& g);
Json toJson(const ReplicationResult& r);
Json toJson(const FuzzConfig& c);
Json toJson(const FuzzResult& r);

Complex parseComplex(const Json& j);
CVector parseComplexVector(const Json& j);
RVector parseRealVector(const Json& j);
Exponent parseExponent(const Json& j);
MeasureSpace parseSpace(const Json& weights);

/// Accepts {"n":..., "entries":[...]} or the bare entries array.
CMatrix parseMatrixEntries(const Json& j);
MatrixOperator parseMatrixOperator(const Json& j, const MeasureSpace& space);

/// Accepts {"symbol":[...]} or the bare array.
MultiplicationOperator parseMultiplicationOperator(const Json& j, const MeasureSpace& space);

MeasurableFunction parseMeasurableFunction(const Json& j);

FuzzConfig parseFuzzConfig(const Json& j);

/// Canonical dump used everywhere a byte-stable payload is required.
std::string dumpJson(const Json& j);

}  // namespace cohenlab
