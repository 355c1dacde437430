#pragma once

#include <string>
#include <vector>

#include "cohenlab/report.hpp"
#include "cohenlab/types.hpp"

namespace cohenlab {

/// Finite set of atoms with strictly positive masses.  Sigma-finite measure
/// spaces enter the artifact only through these desk-scale instances.
class MeasureSpace {
 public:
  explicit MeasureSpace(RVector weights);

  /// Counting measure: n atoms of unit mass.
  static MeasureSpace counting(Index n);

  Index size() const { return weights_.size(); }
  const RVector& weights() const { return weights_; }

  friend bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
    return a.weights_.size() == b.weights_.size() && a.weights_ == b.weights_;
  }

 private:
  RVector weights_;
};

/// Complex-valued function on a MeasureSpace; an element of L^p(X, mu).
struct MeasurableFunction {
  MeasurableFunction(MeasureSpace space, CVector values);

  MeasureSpace space;
  CVector values;
};

/// Exponent in [1, inf].  Infinity is a tagged value, never a float
/// sentinel, so 1/inf == 0 holds exactly in the Hoelder precondition.
class Exponent {
 public:
  Exponent(double p);  // NOLINT: implicit by design, pnorm(f, 2) reads well
  static Exponent inf();

  bool isInf() const { return inf_; }

  /// Finite value; +infinity for the tagged case.
  double value() const;

  /// 1/p, exactly 0 for p = inf.
  double reciprocal() const { return inf_ ? 0.0 : 1.0 / value_; }

  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }

 private:
  Exponent(double p, bool inf) : value_(p), inf_(inf) {}
  double value_;
  bool inf_;
};

/// (sum_i w_i |f_i|^p)^(1/p) for finite p; max_i |f_i| for p = inf (every
/// atom has positive mass, so the essential sup is the max).
double pnorm(const MeasurableFunction& f, Exponent p);

/// sum_i w_i f_i conj(g_i); the weighted L^2 pairing.
Complex innerProduct(const MeasurableFunction& f, const MeasurableFunction& g);

/// Coordinatewise product f_1 ... f_m.  Rejects an empty list.
MeasurableFunction pointwiseProduct(const std::vector<MeasurableFunction>& fs);

/// Generalized Hoelder inequality  ||f_1...f_m||_r <= prod ||f_i||_{p_i},
/// under  sum 1/p_i = 1/r  (checked to 1e-12).
InequalityReport holderCheck(const std::vector<MeasurableFunction>& fs,
                             const std::vector<Exponent>& ps, Exponent r,
                             double tolerance = kDefaultTolerance);

}  // namespace cohenlab
