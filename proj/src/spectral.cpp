#include "cohenlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "cohenlab/rng.hpp"

namespace cohenlab {

namespace detail {

namespace {

// Deterministic start: all-ones plus a fixed perturbation, so repeated runs
// are bit-reproducible.
CVector deterministicStart(Index n) {
  CVector v(n);
  for (Index j = 0; j < n; ++j) v[j] = Complex(1.0 + 1e-3 * double((j % 7) - 3), 0.0);
  return v;
}

CVector alternateStart(Index n) {
  CVector v(n);
  for (Index j = 0; j < n; ++j)
    v[j] = Complex(std::cos(double(j) + 1.0), std::sin(2.0 * double(j) + 1.0));
  return v;
}

}  // namespace

double sigmaMax(const CMatrix& M, double tol, long maxIterations, CVector* warm) {
  const Index n = M.rows();
  if (n == 0) return 0.0;
  const double scale = M.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;

  const CMatrix G = M.adjoint() * M;  // PSD; sigma_max^2 is its top eigenvalue
  const double gScale = G.cwiseAbs().rowwise().sum().maxCoeff();
  if (gScale == 0.0) return 0.0;

  CVector v;
  if (warm != nullptr && warm->size() == n && warm->norm() > 0.0) {
    v = *warm;
  } else {
    v = deterministicStart(n);
  }
  v.normalize();

  double mu = 0.0;
  bool restarted = false;
  for (long it = 0; it < maxIterations; ++it) {
    CVector u = G * v;
    mu = u.dot(v).real();  // v^H G v for unit v
    const double resid = (u - mu * v).norm();
    const double un = u.norm();
    if (un == 0.0) {
      // Start landed in the kernel; one retry from the alternate vector.
      if (restarted) {
        mu = 0.0;
        break;
      }
      v = alternateStart(n).normalized();
      restarted = true;
      continue;
    }
    v = u / un;
    if (resid <= tol * gScale) break;
  }
  if (warm != nullptr) *warm = v;
  return std::sqrt(std::max(mu, 0.0));
}

}  // namespace detail

namespace {

double weightedColumnNorm(const MatrixOperator& A) {
  const RVector& w = A.space.weights();
  double best = 0.0;
  for (Index j = 0; j < A.size(); ++j) {
    double colSum = 0.0;
    for (Index i = 0; i < A.size(); ++i) colSum += w[i] * std::abs(A.entries(i, j));
    best = std::max(best, colSum / w[j]);
  }
  return best;
}

double rowSumNorm(const CMatrix& m) {
  double best = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    double rowSum = 0.0;
    for (Index j = 0; j < m.cols(); ++j) rowSum += std::abs(m(i, j));
    best = std::max(best, rowSum);
  }
  return best;
}

Complex phaseOf(const Complex& z) {
  const double a = std::abs(z);
  return a == 0.0 ? Complex(0.0, 0.0) : z / a;
}

double weightedPNorm(const CVector& v, const RVector& w, double p) {
  double m = 0.0;
  for (Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  if (m == 0.0) return 0.0;
  double sum = 0.0;
  for (Index i = 0; i < v.size(); ++i) sum += w[i] * std::pow(std::abs(v[i]) / m, p);
  return m * std::pow(sum, 1.0 / p);
}

// Duality map normalized to the unit dual sphere:  J_p(y)_i =
// phase(y_i) (|y_i| / ||y||_p)^(p-1);  <y, J_p(y)> = ||y||_p.
CVector dualityMap(const CVector& y, const RVector& w, double p) {
  const double np = weightedPNorm(y, w, p);
  CVector out = CVector::Zero(y.size());
  if (np == 0.0) return out;
  for (Index i = 0; i < y.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a > 0.0) out[i] = phaseOf(y[i]) * std::pow(a / np, p - 1.0);
  }
  return out;
}

}  // namespace

double operatorNorm(const MatrixOperator& A, Exponent p) {
  if (p.isInf()) return rowSumNorm(A.entries);
  if (p.value() == 1.0) return weightedColumnNorm(A);
  if (p.value() == 2.0) return detail::sigmaMax(similarityMatrix(A));
  throw UnsupportedExponentError(
      "operatorNorm: exact norms exist for p in {1, 2, inf} only; "
      "use operatorNormEstimate for general p");
}

ConvergenceReport operatorNormEstimate(const MatrixOperator& A, Exponent p, int restarts,
                                       std::uint64_t seed) {
  if (p.isInf() || !(p.value() > 1.0))
    throw InputError("operatorNormEstimate: requires 1 < p < inf");
  const double pv = p.value();
  const double qv = pv / (pv - 1.0);
  const RVector& w = A.space.weights();
  const Index n = A.size();
  const CMatrix Astar = adjoint(A).entries;

  ConvergenceReport rep;
  Rng rng(seed);
  const long maxIterPerStart = 500;
  const double tol = 1e-12;

  for (int s = 0; s <= std::max(restarts, 0); ++s) {
    CVector x(n);
    if (s == 0) {
      x = CVector::Ones(n);
    } else {
      for (Index i = 0; i < n; ++i) x[i] = rng.complexNormal();
      if (x.norm() == 0.0) x = CVector::Ones(n);
    }
    double nx = weightedPNorm(x, w, pv);
    x /= nx;

    double gamma = 0.0;
    double lastGain = 0.0;
    bool stationary = false;
    for (long it = 0; it < maxIterPerStart; ++it) {
      ++rep.iterations;
      const CVector y = A.entries * x;
      const double g = weightedPNorm(y, w, pv);
      lastGain = g - gamma;
      gamma = g;
      if (g == 0.0) {
        stationary = true;
        break;
      }
      const CVector z = Astar * dualityMap(y, w, pv);
      const double zq = weightedPNorm(z, w, qv);
      double pairing = 0.0;
      for (Index i = 0; i < n; ++i) pairing += w[i] * (x[i] * std::conj(z[i])).real();
      // At a stationary point ||z||_q = Re<x, z>; Hoelder gives >= elsewhere.
      if (zq <= pairing * (1.0 + 1e-12) + 1e-15) {
        stationary = true;
        break;
      }
      x = dualityMap(z, w, qv);
      x /= weightedPNorm(x, w, pv);
      if (it > 0 && lastGain <= tol * std::max(1.0, gamma)) {
        stationary = true;
        break;
      }
    }
    if (gamma > rep.value) {
      rep.value = gamma;
      rep.residual = std::abs(lastGain) / std::max(1.0, gamma);
      rep.converged = stationary;
    }
  }
  return rep;
}

ConvergenceReport spectralRadius(const MatrixOperator& A, double tol) {
  if (!(tol > 0.0)) throw InputError("spectralRadius: tolerance must be positive");
  ConvergenceReport rep;
  CMatrix M = similarityMatrix(A);
  CVector warm;
  double logAccum = 0.0;
  double prev = -1.0;
  const int maxSquarings = 60;

  for (int k = 0; k <= maxSquarings; ++k) {
    const double s = detail::sigmaMax(M, 1e-12, 20000, &warm);
    rep.iterations = k;
    if (s == 0.0) {
      // Exact-zero path: the normalized power vanished, so A is nilpotent
      // (reached in <= n squarings) or zero.
      rep.value = 0.0;
      rep.residual = 0.0;
      rep.converged = true;
      return rep;
    }
    const double estimate = std::exp(logAccum + std::ldexp(std::log(s), -k));
    rep.value = estimate;
    if (k > 0) {
      // Relative increment; converged implies residual <= tol.
      rep.residual = std::abs(estimate - prev) / std::max(1.0, estimate);
      if (rep.residual <= tol) {
        rep.converged = true;
        return rep;
      }
    }
    prev = estimate;
    logAccum += std::ldexp(std::log(s), -k);
    M = (M / s).eval();
    M = (M * M).eval();
  }
  // Slow (defective borderline) convergence: report the upper-biased
  // estimate honestly.
  rep.converged = false;
  return rep;
}

ConvergenceReport perronRadius(const MatrixOperator& A, double tol, long maxIterations) {
  const double maxAbs = A.entries.cwiseAbs().maxCoeff();
  if (!isPositiveOperator(A, 1e-12 * std::max(1.0, maxAbs)))
    throw InputError("perronRadius: operator is not positive (entrywise nonnegative)");

  ConvergenceReport rep;
  const Index n = A.size();
  RMatrix P(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) P(i, j) = std::max(A.entries(i, j).real(), 0.0);

  const double maxEntry = P.maxCoeff();
  if (maxEntry == 0.0) {
    rep.converged = true;
    return rep;
  }
  const double delta = 1e-8 * maxEntry;  // breaks periodicity

  RVector x = RVector::Ones(n).normalized();
  double lambda = 0.0;
  for (long it = 1; it <= maxIterations; ++it) {
    RVector y = P * x + delta * x;
    lambda = x.dot(y);  // Rayleigh estimate for unit x
    rep.residual = (y - lambda * x).norm() / std::max({lambda, delta, 1.0e-300});
    rep.iterations = it;
    const double yn = y.norm();
    if (yn == 0.0) {
      lambda = 0.0;
      rep.residual = 0.0;
      rep.converged = true;
      break;
    }
    x = y / yn;
    if (rep.residual <= tol) {
      rep.converged = true;
      break;
    }
  }
  rep.value = std::max(lambda - delta, 0.0);
  return rep;
}

}  // namespace cohenlab
