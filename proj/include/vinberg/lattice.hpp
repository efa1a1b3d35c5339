#pragma once

#include <optional>
#include <string>

#include "vinberg/exact_linalg.hpp"
#include "vinberg/matrix.hpp"

namespace vinberg {

// Integer lattice of signature (d, 1). Immutable after construction; the
// constructor verifies the signature exactly.
class QuadraticLattice {
 public:
  explicit QuadraticLattice(IntMat gram);

  // Builds the Gram matrix from quadratic-form coefficients c_ii and
  // c_ij (i < j), listed row by row: c00, c01, .., c0n, c11, c12, ...
  // Cross coefficients must be even (entry c_ij / 2); odd ones are rejected.
  static QuadraticLattice from_form_coefficients(const std::vector<Int>& coeffs);

  const IntMat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }           // d + 1
  std::size_t hyperbolic_dim() const { return dim() - 1; }   // d

  Int inner(const IntVec& x, const IntVec& y) const;
  Int norm(const IntVec& x) const { return inner(x, x); }

 private:
  IntMat gram_;
};

enum class RootRejection {
  NotPrimitive,
  NonPositiveNorm,
  NotCrystallographic,
};

struct RootCheck {
  bool accepted = false;
  std::optional<RootRejection> reason;

  static RootCheck ok() { return {true, std::nullopt}; }
  static RootCheck reject(RootRejection r) { return {false, r}; }
};

std::string to_string(RootRejection r);

// Accepted iff primitive, positive norm, and 2(e, b_i) divisible by (e, e)
// for every basis vector b_i; the first failing condition is reported.
RootCheck is_root(const QuadraticLattice& lattice, const IntVec& e);

// A validated root together with its cached norm.
class Root {
 public:
  Root(const QuadraticLattice& lattice, IntVec vector);

  const IntVec& vector() const { return vector_; }
  const Int& norm() const { return norm_; }

  bool operator==(const Root& other) const { return vector_ == other.vector_; }

 private:
  IntVec vector_;
  Int norm_;
};

// Integer matrix preserving the bilinear form: U^T G U == G, det U = +-1.
class LatticeIsometry {
 public:
  LatticeIsometry(const QuadraticLattice& lattice, IntMat matrix);
  const IntMat& matrix() const { return matrix_; }

 private:
  IntMat matrix_;
};

// Matrix of x -> x - (2(e,x)/(e,e)) e acting on column vectors; integral by
// the crystallographic condition.
LatticeIsometry reflection_matrix(const QuadraticLattice& lattice, const Root& e);

}  // namespace vinberg
