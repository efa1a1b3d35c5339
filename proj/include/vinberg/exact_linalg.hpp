#pragma once

#include <vector>

#include "vinberg/matrix.hpp"

namespace vinberg {

// Inertia of a symmetric integer matrix.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  bool operator==(const Signature&) const = default;
};

// Exact inertia via rational symmetric elimination. Degenerate diagonals are
// handled by symmetric swaps and a row+column add that turns a nonzero
// off-diagonal entry into a usable pivot; zero rows count toward `zero`.
Signature signature(const IntMat& m);

// Smith invariant factors s_1 | s_2 | ... | s_n, all positive,
// with product |det m|. Throws SingularMatrixError when det m == 0.
std::vector<Int> invariant_factors(const IntMat& m);

// gcd of entries is 1. Throws ZeroVectorError on the zero vector.
bool is_primitive(const IntVec& v);

}  // namespace vinberg
