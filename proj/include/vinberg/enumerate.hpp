#pragma once

#include "vinberg/matrix.hpp"

namespace vinberg {

// All integer y with y^T A y + 2 b.y + c == 0, for A positive definite.
// Pure integer arithmetic: the range of each coordinate comes from the
// Schur-complement inequality det(P) * min_{rest} F <= 0, whose coefficients
// are integers built from adj(P).
//
// Throws InputError if A is not positive definite (detected lazily through a
// nonpositive leading determinant chain).
std::vector<IntVec> solve_definite_quadric(const IntMat& a, const IntVec& b, const Int& c);

}  // namespace vinberg
