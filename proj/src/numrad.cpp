#include "cohenlab/numrad.hpp"

#include <algorithm>
#include <cmath>

#include "cohenlab/rng.hpp"
#include "cohenlab/spectral.hpp"

namespace cohenlab {

std::string radiusMethodName(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::ThetaSweep: return "theta-sweep";
    case RadiusMethod::ConeAscent: return "cone-ascent";
    case RadiusMethod::RandomSample: return "random-sample";
  }
  return "unknown";
}

namespace {

double rowSumNorm(const CMatrix& m) {
  double best = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    double rowSum = 0.0;
    for (Index j = 0; j < m.cols(); ++j) rowSum += std::abs(m(i, j));
    best = std::max(best, rowSum);
  }
  return best;
}

// Hermitian split of the similarity image:  H(theta) = cos(theta) S +
// sin(theta) T with S = (M + M^H)/2 and T = i(M - M^H)/2.  Built entrywise
// so conjugate pairs match exactly and the diagonal is exactly real.
void hermitianSplit(const CMatrix& M, CMatrix& S, CMatrix& T) {
  const Index n = M.rows();
  S.resize(n, n);
  T.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    S(i, i) = Complex(M(i, i).real(), 0.0);
    T(i, i) = Complex(-M(i, i).imag(), 0.0);
    for (Index j = i + 1; j < n; ++j) {
      const Complex s = 0.5 * (M(i, j) + std::conj(M(j, i)));
      const Complex t = 0.5 * Complex(0.0, 1.0) * (M(i, j) - std::conj(M(j, i)));
      S(i, j) = s;
      S(j, i) = std::conj(s);
      T(i, j) = t;
      T(j, i) = std::conj(t);
    }
  }
}

void hermitianAt(const CMatrix& S, const CMatrix& T, double theta, CMatrix& H) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  H.noalias() = c * S + s * T;
  // Real-scalar combinations keep conjugate symmetry; pin the diagonal's
  // imaginary dust anyway.
  for (Index i = 0; i < H.rows(); ++i) H(i, i) = Complex(H(i, i).real(), 0.0);
}

CVector fixedStart(Index n) {
  CVector v(n);
  for (Index j = 0; j < n; ++j) v[j] = Complex(1.0 + 1e-3 * double((j % 7) - 3), 0.0);
  return v.normalized();
}

CVector secondStart(Index n) {
  CVector v(n);
  for (Index j = 0; j < n; ++j)
    v[j] = Complex(std::cos(double(j) + 1.0), std::sin(2.0 * double(j) + 1.0));
  return v.normalized();
}

// Power iteration on H + sI, s = ||H||_inf >= rho(H), so the target
// eigenvalue is dominant.  The Rayleigh quotient is always a lower bound on
// lambda_max, which keeps every sweep evaluation certificate-safe.
double lambdaMaxFrom(const CMatrix& H, double tol, long maxIterations, CVector& x) {
  const Index n = H.rows();
  const double shift = rowSumNorm(H);
  if (shift == 0.0) {
    if (x.size() != n || x.norm() == 0.0) x = fixedStart(n);
    return 0.0;
  }
  if (x.size() != n || x.norm() == 0.0) x = fixedStart(n);
  x.normalize();
  double mu = 0.0;
  CVector y(n);
  for (long it = 0; it < maxIterations; ++it) {
    y.noalias() = H * x;
    y += shift * x;
    mu = y.dot(x).real();  // x^H (H + sI) x
    const double resid = (y - mu * x).norm();
    const double yn = y.norm();
    if (yn == 0.0) return -shift;  // H = -sI edge
    x = y / yn;
    if (resid <= tol * shift) break;
  }
  return mu - shift;
}

double lambdaMaxBothStarts(const CMatrix& H, double tol, CVector& vec) {
  CVector x1 = fixedStart(H.rows());
  const double l1 = lambdaMaxFrom(H, tol, 100000, x1);
  CVector x2 = secondStart(H.rows());
  const double l2 = lambdaMaxFrom(H, tol, 100000, x2);
  if (l2 > l1) {
    vec = x2;
    return l2;
  }
  vec = x1;
  return l1;
}

}  // namespace

MatrixOperator hermitianPart(const MatrixOperator& A, double theta) {
  const CMatrix M = similarityMatrix(A);
  CMatrix S, T, H;
  hermitianSplit(M, S, T);
  hermitianAt(S, T, theta, H);
  return {MeasureSpace::counting(A.size()), std::move(H)};
}

double lambdaMaxHermitian(const MatrixOperator& H, double tol) {
  const CMatrix& M = H.entries;
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError("lambdaMaxHermitian: matrix is not Hermitian");
  CVector vec;
  return lambdaMaxBothStarts(M, tol, vec);
}

RadiusResult numericalRadius(const MatrixOperator& A, double tol, int gridPoints) {
  if (!(tol > 0.0)) throw InputError("numericalRadius: tolerance must be positive");
  if (gridPoints < 8) throw InputError("numericalRadius: grid too coarse");
  const Index n = A.size();
  const CMatrix M = similarityMatrix(A);
  CMatrix S, T;
  hermitianSplit(M, S, T);
  const double opNorm2 = detail::sigmaMax(M);
  const double dTheta = 2.0 * M_PI / gridPoints;

  auto finish = [&](double value, double thetaStar, CVector eigvec) {
    if (thetaStar < 0.0) thetaStar += 2.0 * M_PI;
    if (thetaStar >= 2.0 * M_PI) thetaStar -= 2.0 * M_PI;
    CVector fw(n);
    for (Index i = 0; i < n; ++i) fw[i] = eigvec[i] / std::sqrt(A.space.weights()[i]);
    MeasurableFunction witness(A.space, std::move(fw));
    return RadiusResult{std::max(value, 0.0), thetaStar, std::move(witness),
                        RadiusMethod::ThetaSweep, opNorm2 * dTheta / 2.0};
  };

  if (opNorm2 == 0.0) return finish(0.0, 0.0, fixedStart(n));

  // Grid pass locates the winning bracket; per-point accuracy only has to
  // rank brackets, the winner is re-solved tightly below.  Warm-starting
  // tracks the dominant eigenvector branch along theta.
  const double gridTol = 1e-7;
  CMatrix H(n, n);
  CVector warm = fixedStart(n);
  auto evalG = [&](double theta, CVector& vec, double ptol, long cap) {
    hermitianAt(S, T, theta, H);
    return lambdaMaxFrom(H, ptol, cap, vec);
  };

  double bestVal = -std::numeric_limits<double>::infinity();
  double bestTheta = 0.0;
  for (int k = 0; k < gridPoints; ++k) {
    const double theta = k * dTheta;
    const double g = evalG(theta, warm, gridTol, 3000);
    if (g > bestVal) {  // strict: ties keep the smaller theta
      bestVal = g;
      bestTheta = theta;
    }
  }

  // Golden-section refinement around the best bracket, tracking the running
  // max over every evaluation so a non-unimodal bracket can only improve
  // the answer.
  double lo = bestTheta - dTheta;
  double hi = bestTheta + dTheta;
  double refBest = bestVal;
  double refBestTheta = bestTheta;
  CVector rv = warm;
  auto evalRefine = [&](double theta) {
    const double g = evalG(theta, rv, gridTol * 1e-2, 20000);
    if (g > refBest) {
      refBest = g;
      refBestTheta = theta;
    }
    return g;
  };
  {
    const double gl = evalRefine(lo);
    const double gh = evalRefine(hi);
    // Rising at both ends signals a bimodal bracket: widen once by a cell.
    if (gl > bestVal && gh > bestVal) {
      lo -= dTheta;
      hi += dTheta;
    }
  }
  const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invPhi * (hi - lo);
  double x2 = lo + invPhi * (hi - lo);
  double f1 = evalRefine(x1);
  double f2 = evalRefine(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invPhi * (hi - lo);
      f2 = evalRefine(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invPhi * (hi - lo);
      f1 = evalRefine(x1);
    }
  }

  // High-accuracy solve at the refined angle, both fixed starts.
  hermitianAt(S, T, refBestTheta, H);
  CVector eigvec;
  double value = lambdaMaxBothStarts(H, tol, eigvec);
  if (value < refBest) value = refBest;
  return finish(value, refBestTheta, std::move(eigvec));
}

RadiusResult numericalRadiusPositiveCone(const MatrixOperator& A, int restarts,
                                         std::uint64_t seed, double tol) {
  const double maxAbs = A.entries.cwiseAbs().maxCoeff();
  if (!isPositiveOperator(A, 1e-12 * std::max(1.0, maxAbs)))
    throw InputError("numericalRadiusPositiveCone: operator is not positive");
  const Index n = A.size();
  const RVector& w = A.space.weights();
  RMatrix P(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) P(i, j) = std::max(A.entries(i, j).real(), 0.0);
  // Gradient of f -> <Af, f> in the weighted geometry: (A + A^*) f, with the
  // weighted adjoint A^* = W^-1 A^T W.
  RMatrix G = P;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) G(i, j) += (w[j] / w[i]) * P(j, i);

  auto quadForm = [&](const RVector& f) {
    const RVector af = P * f;
    double q = 0.0;
    for (Index i = 0; i < n; ++i) q += w[i] * af[i] * f[i];
    return q;
  };
  auto wnorm = [&](const RVector& f) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) s += w[i] * f[i] * f[i];
    return std::sqrt(s);
  };
  auto projectNormalize = [&](RVector f) {
    for (Index i = 0; i < n; ++i) f[i] = std::max(f[i], 0.0);
    const double nn = wnorm(f);
    if (nn == 0.0) {
      RVector ones = RVector::Ones(n);
      return RVector(ones / wnorm(ones));
    }
    return RVector(f / nn);
  };

  Rng rng(seed);
  RVector bestF = projectNormalize(RVector::Ones(n));
  double bestQ = quadForm(bestF);

  for (int s = 0; s <= std::max(restarts, 0); ++s) {
    RVector f;
    if (s == 0) {
      f = projectNormalize(RVector::Ones(n));
    } else {
      f.resize(n);
      for (Index i = 0; i < n; ++i) f[i] = rng.uniform01();
      f = projectNormalize(f);
    }
    double q = quadForm(f);
    double step = 1.0 / std::max(1.0, G.cwiseAbs().rowwise().sum().maxCoeff());
    bool done = false;
    for (int it = 0; it < 5000 && !done; ++it) {
      const RVector grad = G * f;
      bool improved = false;
      double alpha = step;
      for (int half = 0; half < 40; ++half) {
        RVector cand = projectNormalize(f + alpha * grad);
        const double qc = quadForm(cand);
        if (qc > q) {
          f = std::move(cand);
          const double gain = qc - q;
          q = qc;
          improved = true;
          step = alpha * 1.5;
          if (gain <= tol * std::max(1.0, q)) done = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!improved) break;  // stationary on the cone
    }
    if (q > bestQ) {
      bestQ = q;
      bestF = f;
    }
  }

  CVector fv(n);
  for (Index i = 0; i < n; ++i) fv[i] = Complex(bestF[i], 0.0);
  MeasurableFunction witness(A.space, std::move(fv));
  return {bestQ, 0.0, std::move(witness), RadiusMethod::ConeAscent, 0.0};
}

RadiusResult numericalRadiusSampled(const MatrixOperator& A, long trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw InputError("numericalRadiusSampled: trials must be >= 1");
  const Index n = A.size();
  const RVector& w = A.space.weights();
  Rng rng(seed);
  double best = -1.0;
  double bestTheta = 0.0;
  CVector bestV;

  auto wnorm = [&](const CVector& f) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) s += w[i] * std::norm(f[i]);
    return std::sqrt(s);
  };

  for (long t = 0; t < trials; ++t) {
    CVector f(n);
    for (Index i = 0; i < n; ++i) f[i] = rng.complexNormal();
    const double nn = wnorm(f);
    if (nn == 0.0) continue;
    f /= nn;
    Complex q{0.0, 0.0};
    const CVector af = A.entries * f;
    for (Index i = 0; i < n; ++i) q += w[i] * af[i] * std::conj(f[i]);
    const double a = std::abs(q);
    if (a > best) {
      best = a;
      bestTheta = std::arg(q);
      bestV = f;
    }
  }
  if (best < 0.0) {
    bestV = CVector::Zero(n);
    bestV[0] = Complex(1.0 / std::sqrt(w[0]), 0.0);
    best = 0.0;
  }
  if (bestTheta < 0.0) bestTheta += 2.0 * M_PI;
  MeasurableFunction witness(A.space, std::move(bestV));
  return {best, bestTheta, std::move(witness), RadiusMethod::RandomSample, 0.0};
}

}  // namespace cohenlab
