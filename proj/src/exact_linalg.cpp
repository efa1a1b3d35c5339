#include "vinberg/exact_linalg.hpp"

#include <algorithm>

namespace vinberg {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat to_rational(const IntMat& m) {
  RatMat a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m(i, j));
  return a;
}

void symmetric_swap(RatMat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(a[i], a[j]);
  for (auto& row : a) std::swap(row[i], row[j]);
}

// congruence op: row i += row j, col i += col j
void symmetric_add(RatMat& a, std::size_t i, std::size_t j) {
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
  for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
}

}  // namespace

Signature signature(const IntMat& m) {
  if (!m.is_symmetric()) throw DimensionMismatchError("signature: matrix not symmetric");
  std::size_t n = m.rows();
  RatMat a = to_rational(m);
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][i] != 0) {
          piv = i;
          break;
        }
      if (piv < n) {
        symmetric_swap(a, k, piv);
      } else {
        // all remaining diagonal entries vanish; graft a pivot from an
        // off-diagonal entry, or conclude the rest of the block is zero
        std::size_t oi = n, oj = n;
        for (std::size_t i = k; i < n && oi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi == n) {
          sig.zero += n - k;
          return sig;
        }
        symmetric_add(a, oi, oj);  // a[oi][oi] becomes 2*a[oi][oj] != 0
        symmetric_swap(a, k, oi);
      }
    }
    const Rat pivot = a[k][k];
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat factor = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
      for (std::size_t j = k; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return sig;
}

std::vector<Int> invariant_factors(const IntMat& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatchError("invariant_factors: matrix not square");
  if (det(m) == 0) throw SingularMatrixError("invariant_factors: det == 0");
  std::size_t n = m.rows();
  IntMat a = m;
  std::vector<Int> factors;
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // minimal nonzero |entry| in the trailing block becomes the pivot
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          if (bi == n || cmp(abs(a(i, j)), abs(a(bi, bj))) < 0) {
            bi = i;
            bj = j;
          }
        }
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
      bool reduced = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Int q = floor_div(a(i, t), a(t, t));
        for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) reduced = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = floor_div(a(t, j), a(t, t));
        for (std::size_t i = t; i < n; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) reduced = false;
      }
      if (!reduced) continue;
      // pivot must divide every remaining entry for the Smith chain
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < n; ++k) a(t, k) += a(i, k);
            divides = false;
          }
      if (divides) break;
    }
    factors.push_back(abs(a(t, t)));
  }
  return factors;
}

bool is_primitive(const IntVec& v) {
  if (is_zero(v)) throw ZeroVectorError("is_primitive: zero vector");
  return content(v) == 1;
}

}  // namespace vinberg
