#pragma once

#include "vinberg/lattice.hpp"

// Shared fixtures: two rank-3 Lorentzian lattices with known root behaviour.
// Lattice A (3x0^2 + 14x0x1 + 98x0x2 + 49x2^2) has a well-documented root
// sequence; lattice B (49x1^2 + 98x0x2 + 14x1x2 + 3x2^2) has no roots at all.
namespace fixtures {

using vinberg::Int;
using vinberg::IntMat;
using vinberg::IntVec;
using vinberg::QuadraticLattice;

inline const std::vector<Int>& form_a_coefficients() {
  // c00, c01, c02, c11, c12, c22
  static const std::vector<Int> c{3, 14, 98, 0, 0, 49};
  return c;
}

inline const std::vector<Int>& form_b_coefficients() {
  static const std::vector<Int> c{0, 0, 98, 49, 14, 3};
  return c;
}

inline const QuadraticLattice& lattice_a() {
  static const QuadraticLattice l{IntMat{{3, 7, 49}, {7, 0, 0}, {49, 0, 49}}};
  return l;
}

inline const QuadraticLattice& lattice_b() {
  static const QuadraticLattice l{IntMat{{0, 0, 49}, {0, 49, 7}, {49, 7, 3}}};
  return l;
}

inline const QuadraticLattice& lattice_diag_11m1() {
  static const QuadraticLattice l{IntMat{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  return l;
}

// the sixteen roots of lattice A, in their published order
inline const std::vector<IntVec>& known_roots_a() {
  static const std::vector<IntVec> roots{
      {0, 7, -1},     {-7, -11, 2},   {0, 0, 1},      {-42, -24, 5},
      {-98, 14, 1},   {-140, -31, 9}, {-168, -12, 7}, {-21, -61, 14},
      {-42, -94, 19}, {-329, 22, 7},  {-42, -108, 23}, {-252, -74, 19},
      {-273, -37, 14}, {-28, -86, 21}, {-56, -151, 33}, {-49, -154, 39}};
  return roots;
}

// the first four reflection matrices of lattice A
inline const std::vector<IntMat>& known_reflections_a() {
  static const std::vector<IntMat> ms{
      IntMat{{1, 0, 0}, {0, 1, 14}, {0, 0, -1}},
      IntMat{{1, -14, -70}, {0, -21, -110}, {0, 4, 21}},
      IntMat{{1, 0, 0}, {0, 1, 0}, {-2, 0, -1}},
      IntMat{{-83, -504, -3108}, {-48, -287, -1776}, {10, 60, 371}}};
  return ms;
}

}  // namespace fixtures
