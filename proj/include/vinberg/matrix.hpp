#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vinberg/numeric.hpp"

namespace vinberg {

using IntVec = std::vector<Int>;

// Dense arbitrary-precision integer matrix, row major. Sized for desk-scale
// lattice work (dimensions in the single or low double digits).
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMat& other) const = default;

  bool is_symmetric() const;
  IntMat transposed() const;
  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);

Int dot(const IntVec& a, const IntVec& b);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& c);
bool is_zero(const IntVec& v);

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMat& m);

// adj(m) * m == det(m) * I
IntMat adjugate(const IntMat& m);

// Column-style Hermite normal form: returns H = m * U with U unimodular.
// Zero columns of H are collected on the right; pivots step down-left to
// down-right with nonnegative pivot entries.
struct HnfResult {
  IntMat h;
  IntMat u;  // transform, m * u == h
};
HnfResult column_hnf(const IntMat& m);

// Basis (as matrix columns) of the integer kernel {x : m x = 0}.
IntMat integer_kernel(const IntMat& m);

// One integer solution of m x = rhs, if any.
bool solve_integer(const IntMat& m, const IntVec& rhs, IntVec* out);

}  // namespace vinberg
