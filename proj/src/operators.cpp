#include "cohenlab/operators.hpp"

#include <cmath>

namespace cohenlab {

MatrixOperator::MatrixOperator(MeasureSpace space_, CMatrix entries_)
    : space(std::move(space_)), entries(std::move(entries_)) {
  if (entries.rows() != entries.cols())
    throw InputError("MatrixOperator: kernel must be square");
  if (entries.rows() != space.size())
    throw InputError("MatrixOperator: kernel dimension must match space size");
}

MatrixOperator MatrixOperator::identity(const MeasureSpace& space) {
  return {space, CMatrix::Identity(space.size(), space.size())};
}

MultiplicationOperator::MultiplicationOperator(MeasureSpace space_, CVector symbol_)
    : space(std::move(space_)), symbol(std::move(symbol_)) {
  if (symbol.size() != space.size())
    throw InputError("MultiplicationOperator: symbol length must equal space size");
}

MultiplicationOperator MultiplicationOperator::identity(const MeasureSpace& space) {
  return {space, CVector::Ones(space.size())};
}

bool MultiplicationOperator::isPositiveSymbol(double tol) const {
  for (Index i = 0; i < symbol.size(); ++i) {
    if (std::abs(symbol[i].imag()) > tol) return false;
    if (symbol[i].real() < -tol) return false;
  }
  return true;
}

bool MultiplicationOperator::isInvertible(double eps) const {
  for (Index i = 0; i < symbol.size(); ++i)
    if (!(std::abs(symbol[i]) >= eps)) return false;
  return true;
}

MultiplicationOperator MultiplicationOperator::inverse(double eps) const {
  if (!isInvertible(eps))
    throw InputError("MultiplicationOperator::inverse: symbol not bounded away from zero");
  CVector inv(symbol.size());
  for (Index i = 0; i < symbol.size(); ++i) inv[i] = Complex(1.0, 0.0) / symbol[i];
  return {space, std::move(inv)};
}

MatrixOperator MultiplicationOperator::toMatrix() const {
  CMatrix m = CMatrix::Zero(symbol.size(), symbol.size());
  m.diagonal() = symbol;
  return {space, std::move(m)};
}

MeasurableFunction apply(const MatrixOperator& A, const MeasurableFunction& f) {
  if (!(A.space == f.space)) throw InputError("apply: operator and function spaces differ");
  return {A.space, A.entries * f.values};
}

MatrixOperator compose(const MatrixOperator& A, const MatrixOperator& B) {
  if (!(A.space == B.space)) throw InputError("compose: operator spaces differ");
  return {A.space, A.entries * B.entries};
}

MatrixOperator compose(const MultiplicationOperator& D, const MatrixOperator& A) {
  if (!(D.space == A.space)) throw InputError("compose: operator spaces differ");
  return {A.space, D.symbol.asDiagonal() * A.entries};
}

MatrixOperator compose(const MatrixOperator& A, const MultiplicationOperator& D) {
  if (!(D.space == A.space)) throw InputError("compose: operator spaces differ");
  return {A.space, A.entries * D.symbol.asDiagonal()};
}

MatrixOperator adjoint(const MatrixOperator& A) {
  const RVector& w = A.space.weights();
  const Index n = A.size();
  CMatrix adj(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) adj(i, j) = (w[j] / w[i]) * std::conj(A.entries(j, i));
  return {A.space, std::move(adj)};
}

bool isPositiveOperator(const MatrixOperator& A, double tol) {
  for (Index i = 0; i < A.size(); ++i)
    for (Index j = 0; j < A.size(); ++j) {
      const Complex& a = A.entries(i, j);
      if (std::abs(a.imag()) > tol) return false;
      if (a.real() < -tol) return false;
    }
  return true;
}

MultiplicationOperator productOfSymbols(const std::vector<MultiplicationOperator>& Ds) {
  if (Ds.empty()) throw InputError("productOfSymbols: empty operator list");
  CVector prod = Ds.front().symbol;
  for (std::size_t k = 1; k < Ds.size(); ++k) {
    if (!(Ds[k].space == Ds.front().space))
      throw InputError("productOfSymbols: operator spaces differ");
    prod.array() *= Ds[k].symbol.array();
  }
  return {Ds.front().space, std::move(prod)};
}

bool equalsIdentity(const MultiplicationOperator& D, double tol) {
  for (Index i = 0; i < D.symbol.size(); ++i)
    if (std::abs(D.symbol[i] - Complex(1.0, 0.0)) > tol) return false;
  return true;
}

bool dominatesIdentity(const MultiplicationOperator& D, double tol) {
  for (Index i = 0; i < D.symbol.size(); ++i) {
    if (std::abs(D.symbol[i].imag()) > tol) return false;
    if (D.symbol[i].real() < 1.0 - tol) return false;
  }
  return true;
}

CMatrix similarityMatrix(const MatrixOperator& A) {
  const RVector& w = A.space.weights();
  const Index n = A.size();
  CMatrix out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = std::sqrt(w[i] / w[j]) * A.entries(i, j);
  return out;
}

MatrixOperator similarityToUnweighted(const MatrixOperator& A) {
  return {MeasureSpace::counting(A.size()), similarityMatrix(A)};
}

}  // namespace cohenlab
