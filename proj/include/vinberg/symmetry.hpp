#pragma once

#include <optional>

#include "vinberg/lattice.hpp"

namespace vinberg {

struct SymmetryOptions {
  // sup-norm bound on the swept residual parameters (the coordinates of the
  // undetermined column images along the constraint kernel)
  Int box = 1000;
};

// Integer matrices with U^T G U == G mapping each pair's first root to its
// second. Paired roots must have equal norms. The linear constraints are
// solved exactly; leftover degrees of freedom sweep a bounded box. Sorted by
// entry order; possibly empty.
std::vector<LatticeIsometry> extend_pairing(const QuadraticLattice& lattice,
                                            const std::vector<std::pair<Root, Root>>& pairs,
                                            const SymmetryOptions& options = {});

// Same search for similitudes U^T G U == mu G: maps between root pairs whose
// norm ratio is a fixed integer mu >= 1. These act on hyperbolic space like
// isometries even though they only scale the lattice form.
struct Similitude {
  IntMat matrix;
  Int multiplier;
};

std::vector<Similitude> extend_pairing_similitude(const QuadraticLattice& lattice,
                                                  const std::vector<std::pair<Root, Root>>& pairs,
                                                  const SymmetryOptions& options = {});

struct OrderClass {
  bool finite = false;
  unsigned order = 0;  // when finite
};

// Admissible finite orders of an integer matrix of size n come from
// cyclotomic degree sums; checking all of them decides finiteness exactly.
std::vector<unsigned> admissible_finite_orders(std::size_t n);

OrderClass order_class(const QuadraticLattice& lattice, const LatticeIsometry& u);

// Projective order of a similitude: the least n with U^n scalar, if any
// within the admissible bound. A multiplier above 1 forces the matrix itself
// to have infinite order.
struct SimilitudeOrder {
  bool matrix_finite = false;
  unsigned matrix_order = 0;
  bool projective_finite = false;
  unsigned projective_order = 0;
};

SimilitudeOrder similitude_order(const QuadraticLattice& lattice, const Similitude& s);

}  // namespace vinberg
