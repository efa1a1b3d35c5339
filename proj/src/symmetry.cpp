#include "vinberg/symmetry.hpp"

#include <algorithm>
#include <functional>

#include "vinberg/enumerate.hpp"

namespace vinberg {

namespace {

// integer points of {w0 + K z : (w, w) == target}, parameters boxed when the
// parameter form is not positive definite
std::vector<IntVec> norm_slice(const QuadraticLattice& lattice, const IntVec& w0,
                               const IntMat& kernel, const Int& target, const Int& box) {
  std::vector<IntVec> out;
  std::size_t rank = kernel.cols();
  IntMat a = kernel.transposed() * lattice.gram() * kernel;
  IntVec b = kernel.transposed() * (lattice.gram() * w0);
  Int c = lattice.norm(w0) - target;
  if (rank == 0) {
    if (c == 0) out.push_back(w0);
    return out;
  }
  bool definite = true;
  try {
    for (const IntVec& z : solve_definite_quadric(a, b, c)) out.push_back(w0 + kernel * z);
  } catch (const InputError&) {
    definite = false;
  }
  if (definite) return out;

  // indefinite parameter form: sweep all but the last coordinate, solve it
  IntVec z(rank, Int(0));
  std::function<void(std::size_t)> sweep = [&](std::size_t i) {
    if (i + 1 == rank) {
      // quadratic in z[i]
      Int qa = a(i, i);
      Int qb = b[i], qc = c;
      for (std::size_t j = 0; j + 1 < rank; ++j) {
        qb += a(i, j) * z[j];
        qc += 2 * b[j] * z[j];
        for (std::size_t k = 0; k + 1 < rank; ++k) qc += a(j, k) * z[j] * z[k];
      }
      auto push = [&](const Int& t) {
        if (abs(t) > box) return;
        z[i] = t;
        out.push_back(w0 + kernel * z);
      };
      if (qa == 0) {
        if (qb != 0) {
          if (qc % (2 * qb) == 0) push(-qc / (2 * qb));
        } else if (qc == 0) {
          for (Int t = -box; t <= box; ++t) push(t);
        }
      } else {
        Int disc = qb * qb - qa * qc;
        Int s;
        if (disc >= 0 && is_perfect_square(disc, &s)) {
          for (int sign = -1; sign <= 1; sign += 2) {
            Int num = -qb + sign * s;
            if (num % qa == 0) push(num / qa);
            if (s == 0) break;
          }
        }
      }
      return;
    }
    for (Int t = -box; t <= box; ++t) {
      z[i] = t;
      sweep(i + 1);
    }
  };
  sweep(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PairingProblem {
  std::vector<IntVec> sources;  // independent constraint vectors
  std::vector<IntVec> images;
  std::vector<std::size_t> completion;  // standard basis indices added
};

std::vector<IntMat> search_similitudes(const QuadraticLattice& lattice,
                                       const std::vector<std::pair<Root, Root>>& pairs,
                                       const Int& mu, const Int& box) {
  std::size_t n = lattice.dim();
  // independent subset of the pair sources
  PairingProblem prob;
  IntMat span(n, 0);
  auto rank_of = [&](const IntMat& m) {
    std::size_t r = 0;
    HnfResult h = column_hnf(m);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      bool z = true;
      for (std::size_t k = 0; k < n; ++k)
        if (h.h(k, c) != 0) z = false;
      if (!z) ++r;
    }
    return r;
  };
  auto try_extend = [&](const IntVec& v) {
    IntMat wider(n, span.cols() + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < span.cols(); ++j) wider(i, j) = span(i, j);
      wider(i, span.cols()) = v[i];
    }
    if (rank_of(wider) > span.cols()) {
      span = wider;
      return true;
    }
    return false;
  };
  for (const auto& [a, b] : pairs)
    if (try_extend(a.vector())) {
      prob.sources.push_back(a.vector());
      prob.images.push_back(b.vector());
    }
  for (std::size_t i = 0; i < n && span.cols() < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    if (try_extend(e)) prob.completion.push_back(i);
  }

  // required inner products between images: (U x, U y) == mu (x, y)
  std::vector<IntMat> results;
  std::vector<IntVec> images = prob.images;
  std::function<void()> assemble = [&]() {
    // U [sources | completion] = [images]; integrality via the adjugate
    IntMat m(n, n), rhs(n, n);
    for (std::size_t j = 0; j < prob.sources.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) {
        m(i, j) = prob.sources[j][i];
        rhs(i, j) = images[j][i];
      }
    for (std::size_t j = 0; j < prob.completion.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) {
        m(i, prob.sources.size() + j) = (i == prob.completion[j]) ? 1 : 0;
        rhs(i, prob.sources.size() + j) = images[prob.sources.size() + j][i];
      }
    Int d = det(m);
    IntMat u = rhs * adjugate(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (u(i, j) % d != 0) return;
        u(i, j) /= d;
      }
    // exact similitude check, plus the original pairing itself
    IntMat gu = u.transposed() * lattice.gram() * u;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (gu(i, j) != mu * lattice.gram()(i, j)) return;
    for (const auto& [a, b] : pairs)
      if (u * a.vector() != b.vector()) return;
    results.push_back(u);
  };

  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == prob.completion.size()) {
      assemble();
      return;
    }
    std::size_t basis_index = prob.completion[idx];
    IntVec ei(n, Int(0));
    ei[basis_index] = 1;
    // linear conditions: (w, images[t]) == mu (e_i, sources[t]) for known t
    std::size_t known = prob.sources.size() + idx;
    IntMat constraints(known, n);
    IntVec rhs(known);
    for (std::size_t t = 0; t < known; ++t) {
      IntVec gi = lattice.gram() * images[t];
      for (std::size_t c = 0; c < n; ++c) constraints(t, c) = gi[c];
      IntVec src(n, Int(0));
      if (t < prob.sources.size())
        src = prob.sources[t];
      else
        src[prob.completion[t - prob.sources.size()]] = 1;
      rhs[t] = mu * lattice.inner(ei, src);
    }
    IntVec particular;
    if (!solve_integer(constraints, rhs, &particular)) return;
    IntMat kernel = integer_kernel(constraints);
    Int target = mu * lattice.gram()(basis_index, basis_index);
    for (const IntVec& w : norm_slice(lattice, particular, kernel, target, box)) {
      images.push_back(w);
      extend(idx + 1);
      images.pop_back();
    }
  };
  extend(0);

  std::sort(results.begin(), results.end(), [&](const IntMat& x, const IntMat& y) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
    return false;
  });
  return results;
}

Int pairing_multiplier(const std::vector<std::pair<Root, Root>>& pairs, bool allow_scaling) {
  if (pairs.empty()) throw InputError("extend_pairing: at least one pair required");
  Int mu = 0;
  for (const auto& [a, b] : pairs) {
    if (allow_scaling) {
      if (b.norm() % a.norm() != 0)
        throw NormMismatchError("norm ratio is not an integer");
      Int ratio = b.norm() / a.norm();
      if (mu == 0) mu = ratio;
      if (ratio != mu) throw NormMismatchError("pairs have inconsistent norm ratios");
    } else {
      if (a.norm() != b.norm()) throw NormMismatchError("paired roots have unequal norms");
      mu = 1;
    }
  }
  return mu;
}

}  // namespace

std::vector<LatticeIsometry> extend_pairing(const QuadraticLattice& lattice,
                                            const std::vector<std::pair<Root, Root>>& pairs,
                                            const SymmetryOptions& options) {
  Int mu = pairing_multiplier(pairs, false);
  std::vector<LatticeIsometry> out;
  for (IntMat& m : search_similitudes(lattice, pairs, mu, options.box))
    out.emplace_back(lattice, std::move(m));
  return out;
}

std::vector<Similitude> extend_pairing_similitude(const QuadraticLattice& lattice,
                                                  const std::vector<std::pair<Root, Root>>& pairs,
                                                  const SymmetryOptions& options) {
  Int mu = pairing_multiplier(pairs, true);
  std::vector<Similitude> out;
  for (IntMat& m : search_similitudes(lattice, pairs, mu, options.box))
    out.push_back({std::move(m), mu});
  return out;
}

std::vector<unsigned> admissible_finite_orders(std::size_t n) {
  std::vector<unsigned> orders;
  for (unsigned m = 1; m <= 10000; ++m) {
    unsigned left = m;
    unsigned sum = 0;
    for (unsigned p = 2; p * p <= left; ++p) {
      if (left % p) continue;
      unsigned pa = 1;
      while (left % p == 0) {
        left /= p;
        pa *= p;
      }
      unsigned phi = pa - pa / p;
      if (!(p == 2 && pa == 2 && m % 4 == 2)) sum += phi;  // -I makes a lone 2 free
    }
    if (left > 1) sum += left - 1;
    if (sum <= n) orders.push_back(m);
  }
  return orders;
}

OrderClass order_class(const QuadraticLattice& lattice, const LatticeIsometry& u) {
  std::vector<unsigned> orders = admissible_finite_orders(lattice.dim());
  unsigned max_order = orders.back();
  IntMat id = IntMat::identity(lattice.dim());
  IntMat power = u.matrix();
  for (unsigned t = 1; t <= max_order; ++t) {
    if (power == id) return {true, t};
    power = power * u.matrix();
  }
  return {false, 0};
}

SimilitudeOrder similitude_order(const QuadraticLattice& lattice, const Similitude& s) {
  SimilitudeOrder out;
  std::size_t n = lattice.dim();
  unsigned max_order = admissible_finite_orders(n).back();
  IntMat id = IntMat::identity(n);
  IntMat power = s.matrix;
  unsigned projective_bound = std::max(24u, 2 * max_order);
  for (unsigned t = 1; t <= projective_bound; ++t) {
    if (!out.matrix_finite && t <= max_order && power == id) {
      out.matrix_finite = true;
      out.matrix_order = t;
    }
    if (!out.projective_finite) {
      bool scalar = true;
      for (std::size_t i = 0; i < n && scalar; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j ? power(i, j) != 0 : power(i, i) != power(0, 0)) {
            scalar = false;
            break;
          }
      if (scalar && power(0, 0) != 0) {
        out.projective_finite = true;
        out.projective_order = t;
      }
    }
    if (out.projective_finite) break;
    power = power * s.matrix;
  }
  return out;
}

}  // namespace vinberg
