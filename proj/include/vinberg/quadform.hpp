#pragma once

#include "vinberg/matrix.hpp"

namespace vinberg {

// Integer quadratic form in n variables, stored by polynomial coefficients:
// q(x) = sum_i c[i][i] x_i^2 + sum_{i<j} c[i][j] x_i x_j.
// Unlike a Gram matrix this stays integral for odd cross coefficients.
class QuadForm {
 public:
  explicit QuadForm(std::size_t n) : n_(n), c_(n, IntVec(n, Int(0))) {}

  // q(x) = x^T gram x; cross coefficients pick up the factor 2
  static QuadForm from_gram(const IntMat& gram);

  // form of q(B y) for integer B: Gram becomes B^T gram B
  static QuadForm restricted(const IntMat& gram, const IntMat& basis);

  std::size_t vars() const { return n_; }

  Int& coeff(std::size_t i, std::size_t j) { return c_[std::min(i, j)][std::max(i, j)]; }
  const Int& coeff(std::size_t i, std::size_t j) const {
    return c_[std::min(i, j)][std::max(i, j)];
  }

  Int eval(const IntVec& x) const;

  // gradient (all partial derivatives), integral
  IntVec gradient(const IntVec& x) const;

  // gcd of all coefficients; divides every value of the form
  Int content() const;
  QuadForm divided_by(const Int& divisor) const;

  // 2x the Gram matrix (integral even when the Gram itself is half-integral)
  IntMat gram2() const;

  bool operator==(const QuadForm&) const = default;

 private:
  std::size_t n_;
  std::vector<IntVec> c_;  // upper triangle used
};

}  // namespace vinberg
