#include "vinberg/quadform.hpp"

namespace vinberg {

QuadForm QuadForm::from_gram(const IntMat& gram) {
  QuadForm q(gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    q.coeff(i, i) = gram(i, i);
    for (std::size_t j = i + 1; j < gram.cols(); ++j) q.coeff(i, j) = 2 * gram(i, j);
  }
  return q;
}

QuadForm QuadForm::restricted(const IntMat& gram, const IntMat& basis) {
  return from_gram(basis.transposed() * gram * basis);
}

Int QuadForm::eval(const IntVec& x) const {
  if (x.size() != n_) throw DimensionMismatchError("QuadForm::eval");
  Int s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    s += c_[i][i] * x[i] * x[i];
    for (std::size_t j = i + 1; j < n_; ++j) s += c_[i][j] * x[i] * x[j];
  }
  return s;
}

IntVec QuadForm::gradient(const IntVec& x) const {
  if (x.size() != n_) throw DimensionMismatchError("QuadForm::gradient");
  IntVec g(n_, Int(0));
  for (std::size_t i = 0; i < n_; ++i) {
    g[i] += 2 * c_[i][i] * x[i];
    for (std::size_t j = i + 1; j < n_; ++j) {
      g[i] += c_[i][j] * x[j];
      g[j] += c_[i][j] * x[i];
    }
  }
  return g;
}

Int QuadForm::content() const {
  Int g = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) g = int_gcd(g, c_[i][j]);
  return g;
}

QuadForm QuadForm::divided_by(const Int& divisor) const {
  QuadForm q(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      if (c_[i][j] % divisor != 0)
        throw InputError("QuadForm::divided_by: coefficient not divisible");
      q.coeff(i, j) = c_[i][j] / divisor;
    }
  return q;
}

IntMat QuadForm::gram2() const {
  IntMat m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    m(i, i) = 2 * c_[i][i];
    for (std::size_t j = i + 1; j < n_; ++j) {
      m(i, j) = c_[i][j];
      m(j, i) = c_[i][j];
    }
  }
  return m;
}

}  // namespace vinberg
