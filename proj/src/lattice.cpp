#include "vinberg/lattice.hpp"

namespace vinberg {

QuadraticLattice::QuadraticLattice(IntMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() < 2)
    throw InputError("lattice Gram matrix must be square of size >= 2");
  if (!gram_.is_symmetric()) throw InputError("lattice Gram matrix must be symmetric");
  Signature sig = signature(gram_);
  if (sig.negative != 1 || sig.zero != 0)
    throw NotLorentzianError("form has signature (" + std::to_string(sig.positive) +
                             "," + std::to_string(sig.negative) + "," +
                             std::to_string(sig.zero) + "), expected (d,1,0)");
}

QuadraticLattice QuadraticLattice::from_form_coefficients(const std::vector<Int>& coeffs) {
  // n(n+1)/2 coefficients determine n
  std::size_t n = 0;
  while (n * (n + 1) / 2 < coeffs.size()) ++n;
  if (n * (n + 1) / 2 != coeffs.size())
    throw InputError("coefficient list has no triangular length");
  IntMat gram(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++idx) {
      if (i == j) {
        gram(i, i) = coeffs[idx];
      } else {
        if (coeffs[idx] % 2 != 0)
          throw InputError("cross coefficient c_" + std::to_string(i) +
                           std::to_string(j) + " is odd; Gram entry would not be integral");
        gram(i, j) = coeffs[idx] / 2;
        gram(j, i) = gram(i, j);
      }
    }
  return QuadraticLattice(std::move(gram));
}

Int QuadraticLattice::inner(const IntVec& x, const IntVec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DimensionMismatchError("inner: vector length != lattice dimension");
  Int s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < dim(); ++j) row += gram_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

std::string to_string(RootRejection r) {
  switch (r) {
    case RootRejection::NotPrimitive:
      return "not primitive";
    case RootRejection::NonPositiveNorm:
      return "non-positive norm";
    case RootRejection::NotCrystallographic:
      return "not crystallographic";
  }
  return "?";
}

RootCheck is_root(const QuadraticLattice& lattice, const IntVec& e) {
  if (e.size() != lattice.dim())
    throw DimensionMismatchError("is_root: vector length != lattice dimension");
  if (is_zero(e)) throw ZeroVectorError("is_root: zero vector");
  if (!is_primitive(e)) return RootCheck::reject(RootRejection::NotPrimitive);
  Int n = lattice.norm(e);
  if (n <= 0) return RootCheck::reject(RootRejection::NonPositiveNorm);
  IntVec ge = lattice.gram() * e;  // (e, b_i) for each basis vector b_i
  for (const Int& g : ge)
    if ((2 * g) % n != 0) return RootCheck::reject(RootRejection::NotCrystallographic);
  return RootCheck::ok();
}

Root::Root(const QuadraticLattice& lattice, IntVec vector) : vector_(std::move(vector)) {
  RootCheck check = is_root(lattice, vector_);
  if (!check.accepted)
    throw NotARootError("vector is not a root: " + to_string(*check.reason));
  norm_ = lattice.norm(vector_);
}

LatticeIsometry::LatticeIsometry(const QuadraticLattice& lattice, IntMat matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != lattice.dim() || matrix_.cols() != lattice.dim())
    throw DimensionMismatchError("isometry size != lattice dimension");
  if (matrix_.transposed() * lattice.gram() * matrix_ != lattice.gram())
    throw NotAnIsometryError("matrix does not preserve the form");
  Int d = det(matrix_);
  if (d != 1 && d != -1) throw NotAnIsometryError("determinant is not a unit");
}

LatticeIsometry reflection_matrix(const QuadraticLattice& lattice, const Root& e) {
  std::size_t n = lattice.dim();
  IntVec ge = lattice.gram() * e.vector();
  IntMat r = IntMat::identity(n);
  // R = I - (2/(e,e)) e (G e)^T, entrywise exact division
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int num = 2 * e.vector()[i] * ge[j];
      if (num % e.norm() != 0)
        throw NotARootError("reflection is not integral");  // unreachable for roots
      r(i, j) -= num / e.norm();
    }
  return LatticeIsometry(lattice, std::move(r));
}

}  // namespace vinberg
