#include "vinberg/enumerate.hpp"

#include <algorithm>

namespace vinberg {

namespace {

// g(t) = alpha t^2 + 2 beta t + gamma with alpha > 0; integer t range with
// g(t) <= 0. isqrt gives a candidate endpoint off by at most one, fixed by
// direct evaluation.
bool convex_range(const Int& alpha, const Int& beta, const Int& gamma, Int* lo, Int* hi) {
  Int disc = beta * beta - alpha * gamma;
  if (disc < 0) return false;
  Int s = isqrt(disc);
  auto g = [&](const Int& t) -> Int { return alpha * t * t + 2 * beta * t + gamma; };
  Int h = floor_div(s - beta, alpha);
  if (g(h + 1) <= 0) h += 1;
  Int l = ceil_div(-beta - s, alpha);
  if (g(l - 1) <= 0) l -= 1;
  if (l > h) return false;
  if (g(l) > 0 || g(h) > 0) return false;
  *lo = l;
  *hi = h;
  return true;
}

void solve_rec(const IntMat& a, const IntVec& b, const Int& c, IntVec& partial,
               std::vector<IntVec>& out) {
  std::size_t r = a.rows();
  if (r == 1) {
    // a00 t^2 + 2 b0 t + c == 0
    Int disc = b[0] * b[0] - a(0, 0) * c;
    if (disc < 0) return;
    Int s;
    if (!is_perfect_square(disc, &s)) return;
    for (int sign = -1; sign <= 1; sign += 2) {
      Int num = -b[0] + sign * s;
      if (num % a(0, 0) != 0) continue;
      Int t = num / a(0, 0);
      IntVec y(partial.size() + 1);
      y[0] = t;
      for (std::size_t i = 0; i < partial.size(); ++i) y[i + 1] = partial[i];
      out.push_back(std::move(y));
      if (s == 0) break;  // double root
    }
    return;
  }
  // split off the last coordinate t: A = [[P, q], [q^T, arr]]
  IntMat p(r - 1, r - 1);
  IntVec q(r - 1);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    q[i] = a(i, r - 1);
    for (std::size_t j = 0; j + 1 < r; ++j) p(i, j) = a(i, j);
  }
  const Int& arr = a(r - 1, r - 1);
  IntVec bh(b.begin(), b.end() - 1);
  const Int& br = b[r - 1];
  Int detp = det(p);
  if (detp <= 0) throw InputError("solve_definite_quadric: form not positive definite");
  IntMat adjp = adjugate(p);
  // detp * min_{y'} F(y', t) = alpha t^2 + 2 beta t + gamma  (<= 0 required)
  IntVec adj_q = adjp * q;
  IntVec adj_b = adjp * bh;
  Int alpha = detp * arr - dot(q, adj_q);
  if (alpha <= 0) throw InputError("solve_definite_quadric: form not positive definite");
  Int beta = detp * br - dot(q, adj_b);
  Int gamma = detp * c - dot(bh, adj_b);
  Int lo, hi;
  if (!convex_range(alpha, beta, gamma, &lo, &hi)) return;
  for (Int t = lo; t <= hi; ++t) {
    IntVec b2(r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) b2[i] = bh[i] + q[i] * t;
    Int c2 = c + arr * t * t + 2 * br * t;
    partial.insert(partial.begin(), t);
    solve_rec(p, b2, c2, partial, out);
    partial.erase(partial.begin());
  }
}

}  // namespace

std::vector<IntVec> solve_definite_quadric(const IntMat& a, const IntVec& b, const Int& c) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw DimensionMismatchError("solve_definite_quadric");
  std::vector<IntVec> out;
  if (a.rows() == 0) {
    if (c == 0) out.push_back({});
    return out;
  }
  IntVec partial;
  solve_rec(a, b, c, partial, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vinberg
