#include "cohenlab/measure.hpp"

#include <cmath>
#include <limits>

#include "cohenlab/json_io.hpp"

namespace cohenlab {

MeasureSpace::MeasureSpace(RVector weights) : weights_(std::move(weights)) {
  if (weights_.size() < 1) throw InputError("MeasureSpace: size must be >= 1");
  for (Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      throw InputError("MeasureSpace: atom weights must be strictly positive");
  }
}

MeasureSpace MeasureSpace::counting(Index n) { return MeasureSpace(RVector::Ones(n)); }

MeasurableFunction::MeasurableFunction(MeasureSpace space_, CVector values_)
    : space(std::move(space_)), values(std::move(values_)) {
  if (values.size() != space.size())
    throw InputError("MeasurableFunction: values length must equal space size");
}

Exponent::Exponent(double p) : value_(p), inf_(false) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw InputError("Exponent: value must lie in [1, inf]");
}

Exponent Exponent::inf() { return Exponent(std::numeric_limits<double>::infinity(), true); }

double Exponent::value() const {
  return inf_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value_);
  return buf;
}

double pnorm(const MeasurableFunction& f, Exponent p) {
  const Index n = f.values.size();
  if (p.isInf()) {
    double m = 0.0;
    for (Index i = 0; i < n; ++i) m = std::max(m, std::abs(f.values[i]));
    return m;
  }
  // Scale by the max modulus so that huge exponents neither overflow nor
  // flush the whole sum to zero.
  double m = 0.0;
  for (Index i = 0; i < n; ++i) m = std::max(m, std::abs(f.values[i]));
  if (m == 0.0) return 0.0;
  const double pv = p.value();
  double sum = 0.0;
  for (Index i = 0; i < n; ++i)
    sum += f.space.weights()[i] * std::pow(std::abs(f.values[i]) / m, pv);
  return m * std::pow(sum, 1.0 / pv);
}

Complex innerProduct(const MeasurableFunction& f, const MeasurableFunction& g) {
  if (!(f.space == g.space)) throw InputError("innerProduct: functions live on different spaces");
  Complex s{0.0, 0.0};
  for (Index i = 0; i < f.values.size(); ++i)
    s += f.space.weights()[i] * f.values[i] * std::conj(g.values[i]);
  return s;
}

MeasurableFunction pointwiseProduct(const std::vector<MeasurableFunction>& fs) {
  if (fs.empty()) throw InputError("pointwiseProduct: empty function list");
  CVector out = fs.front().values;
  for (std::size_t k = 1; k < fs.size(); ++k) {
    if (!(fs[k].space == fs.front().space))
      throw InputError("pointwiseProduct: functions live on different spaces");
    out.array() *= fs[k].values.array();
  }
  return {fs.front().space, std::move(out)};
}

InequalityReport holderCheck(const std::vector<MeasurableFunction>& fs,
                             const std::vector<Exponent>& ps, Exponent r,
                             double tolerance) {
  if (fs.empty() || fs.size() != ps.size())
    throw InputError("holderCheck: need one exponent per function");
  double recipSum = 0.0;
  for (const auto& p : ps) recipSum += p.reciprocal();
  if (std::abs(recipSum - r.reciprocal()) > 1e-12)
    throw InputError("holderCheck: exponent identity sum(1/p_i) = 1/r violated");

  const MeasurableFunction prod = pointwiseProduct(fs);
  const double lhs = pnorm(prod, r);
  std::vector<double> factors;
  std::vector<std::string> methods;
  factors.reserve(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    factors.push_back(pnorm(fs[k], ps[k]));
    methods.push_back("pnorm(" + ps[k].str() + ")");
  }

  Json witnesses = Json::object();
  witnesses["inequality"] = "holder";
  witnesses["weights"] = toJson(fs.front().space.weights());
  Json values = Json::array();
  Json exps = Json::array();
  for (std::size_t k = 0; k < fs.size(); ++k) {
    values.push_back(toJson(fs[k].values));
    exps.push_back(toJson(ps[k]));
  }
  witnesses["functions"] = std::move(values);
  witnesses["exponents"] = std::move(exps);
  witnesses["r"] = toJson(r);

  return makeReport("holder", lhs, std::move(factors), std::move(methods), tolerance,
                    std::move(witnesses));
}

}  // namespace cohenlab
