#include "vinberg/matrix.hpp"

#include <algorithm>
#include <utility>

namespace vinberg {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatchError("ragged initializer");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMat& a, const IntVec& v) {
  if (a.cols() != v.size()) throw DimensionMismatchError("matrix-vector product");
  IntVec r(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vector sum");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vector difference");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scaled(const IntVec& v, const Int& c) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division is exact
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMat adjugate(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("adjugate of non-square");
  std::size_t n = m.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMat minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

HnfResult column_hnf(const IntMat& m) {
  HnfResult res{m, IntMat::identity(m.cols())};
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t rows = h.rows(), cols = h.cols();
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
    // Euclid across columns pivot_col..cols-1 on row r
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot_col; c < cols; ++c) {
        if (h(r, c) == 0) continue;
        if (best == cols || cmp(abs(h(r, c)), abs(h(r, best))) < 0) best = c;
      }
      if (best == cols) break;  // row r zero past pivot; next row
      h.swap_cols(pivot_col, best);
      u.swap_cols(pivot_col, best);
      bool clean = true;
      for (std::size_t c = pivot_col + 1; c < cols; ++c) {
        if (h(r, c) == 0) continue;
        Int q = floor_div(h(r, c), h(r, pivot_col));
        if (q != 0) {
          for (std::size_t k = 0; k < rows; ++k) h(k, c) -= q * h(k, pivot_col);
          for (std::size_t k = 0; k < cols; ++k) u(k, c) -= q * u(k, pivot_col);
        }
        if (h(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, pivot_col) == 0) continue;
    if (h(r, pivot_col) < 0) {
      for (std::size_t k = 0; k < rows; ++k) h(k, pivot_col) = -h(k, pivot_col);
      for (std::size_t k = 0; k < cols; ++k) u(k, pivot_col) = -u(k, pivot_col);
    }
    // reduce earlier columns against this pivot
    for (std::size_t c = 0; c < pivot_col; ++c) {
      Int q = floor_div(h(r, c), h(r, pivot_col));
      if (q != 0) {
        for (std::size_t k = 0; k < rows; ++k) h(k, c) -= q * h(k, pivot_col);
        for (std::size_t k = 0; k < cols; ++k) u(k, c) -= q * u(k, pivot_col);
      }
    }
    ++pivot_col;
  }
  // move any all-zero columns to the right, preserving pivot order
  std::size_t write = 0;
  std::vector<std::size_t> zero_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    bool z = true;
    for (std::size_t k = 0; k < rows; ++k)
      if (h(k, c) != 0) z = false;
    if (z)
      zero_cols.push_back(c);
    else {
      if (write != c) {
        h.swap_cols(write, c);
        u.swap_cols(write, c);
      }
      ++write;
    }
  }
  return res;
}

IntMat integer_kernel(const IntMat& m) {
  HnfResult r = column_hnf(m);
  std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    bool z = true;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (r.h(k, c) != 0) z = false;
    if (!z) ++rank;
  }
  IntMat ker(cols, cols - rank);
  for (std::size_t c = rank; c < cols; ++c)
    for (std::size_t k = 0; k < cols; ++k) ker(k, c - rank) = r.u(k, c);
  return ker;
}

bool solve_integer(const IntMat& m, const IntVec& rhs, IntVec* out) {
  if (m.rows() != rhs.size()) throw DimensionMismatchError("solve_integer");
  HnfResult r = column_hnf(m);
  std::size_t rows = m.rows(), cols = m.cols();
  // forward-substitute against the column-echelon H
  IntVec y(cols, Int(0));
  IntVec residual = rhs;
  std::size_t c = 0;
  for (std::size_t row = 0; row < rows && c < cols; ++row) {
    if (r.h(row, c) == 0) continue;
    Int q = residual[row] / r.h(row, c);
    if (residual[row] % r.h(row, c) != 0) return false;
    y[c] = q;
    for (std::size_t k = 0; k < rows; ++k) residual[k] -= q * r.h(k, c);
    ++c;
  }
  if (!is_zero(residual)) return false;
  IntVec x = r.u * y;
  *out = x;
  return true;
}

}  // namespace vinberg
