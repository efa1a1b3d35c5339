#include "vinberg/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace vinberg {

namespace {

using std::int64_t;
using IVec = std::vector<int64_t>;

int64_t mod64(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return (int64_t)(((__int128)a * b) % m);
}

// coefficients of q reduced modulo m, packed upper-triangular
struct QMod {
  std::size_t n;
  int64_t m;
  std::vector<int64_t> c;  // c[i*n+j], i <= j

  QMod(const QuadForm& q, int64_t modulus) : n(q.vars()), m(modulus), c(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Int r = mod_floor(q.coeff(i, j), Int((unsigned long)m));
        c[i * n + j] = (int64_t)r.get_ui();
      }
  }

  int64_t eval(const int64_t* x) const {
    int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      s = (s + mulmod(mulmod(c[i * n + i], x[i], m), x[i], m)) % m;
      for (std::size_t j = i + 1; j < n; ++j)
        s = (s + mulmod(mulmod(c[i * n + j], x[i], m), x[j], m)) % m;
    }
    return s;
  }

  void gradient(const int64_t* x, int64_t* g) const {
    for (std::size_t i = 0; i < n; ++i) g[i] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = (g[i] + mulmod(2 * c[i * n + i] % m, x[i], m)) % m;
      for (std::size_t j = i + 1; j < n; ++j) {
        g[i] = (g[i] + mulmod(c[i * n + j], x[j], m)) % m;
        g[j] = (g[j] + mulmod(c[i * n + j], x[i], m)) % m;
      }
    }
  }
};

// minimal level at which the primitive branch dies, or 0 if it survives to
// level e (solvable) / Hensel fires (solvable) / width cap hit (unknown)
struct PrimitiveScan {
  LocalStatus status = LocalStatus::Unknown;
  unsigned death = 0;  // minimal j with no primitive solutions mod p^j
};

PrimitiveScan primitive_scan(const QuadForm& q, const Int& target, int64_t p, unsigned e,
                             std::size_t width_cap) {
  std::size_t n = q.vars();
  PrimitiveScan out;

  // level-1 sweep
  int64_t pj = p;  // p^j for current level j
  std::vector<int64_t> states;  // flat, stride n
  {
    QMod qm(q, p);
    int64_t t1 = (int64_t)mod_floor(target, Int((unsigned long)p)).get_ui();
    IVec x(n, 0);
    while (true) {
      bool nonzero = std::any_of(x.begin(), x.end(), [](int64_t v) { return v != 0; });
      if (nonzero && qm.eval(x.data()) == t1)
        states.insert(states.end(), x.begin(), x.end());
      std::size_t i = 0;
      while (i < n && ++x[i] == p) x[i++] = 0;
      if (i == n) break;
    }
  }

  for (unsigned j = 1;; ++j) {
    if (states.empty()) {
      out.status = LocalStatus::Obstructed;
      out.death = j;
      return out;
    }
    if (j >= e) {
      out.status = LocalStatus::Solvable;
      return out;
    }
    if (states.size() / n > width_cap) {
      out.status = LocalStatus::Unknown;
      return out;
    }
    // lift states from mod p^j to mod p^(j+1)
    int64_t pj1 = pj * p;
    QMod qm(q, pj1);
    int64_t t = (int64_t)mod_floor(target, Int((unsigned long)pj1)).get_ui();
    std::vector<int64_t> next;
    IVec g(n), child(n);
    std::size_t count = states.size() / n;
    for (std::size_t s = 0; s < count; ++s) {
      const int64_t* x = &states[s * n];
      int64_t val = qm.eval(x);
      qm.gradient(x, g.data());
      // Hensel: x lifts outright once j exceeds twice the gradient valuation
      unsigned ordg = e + 1;  // "at least j"
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0) continue;
        unsigned o = 0;
        int64_t v = g[i];
        while (v % p == 0) {
          v /= p;
          ++o;
        }
        ordg = std::min(ordg, o);
      }
      if (ordg < j && j > 2 * ordg) {
        out.status = LocalStatus::Solvable;
        return out;
      }
      // children x + p^j u with ((val - t)/p^j) + grad.u == 0 (mod p)
      int64_t c = mod64((val - t) / pj, p);
      IVec w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = mod64(g[i], p);
      bool wzero = std::all_of(w.begin(), w.end(), [](int64_t v) { return v == 0; });
      if (j + 1 == e) {
        // last level: a child exists iff the linear condition is solvable
        if (!wzero || c == 0) {
          out.status = LocalStatus::Solvable;
          return out;
        }
        continue;
      }
      if (wzero && c != 0) continue;
      IVec u(n, 0);
      while (true) {
        int64_t lhs = c;
        for (std::size_t i = 0; i < n; ++i) lhs = (lhs + w[i] * u[i]) % p;
        if (lhs % p == 0) {
          for (std::size_t i = 0; i < n; ++i) child[i] = x[i] + pj * u[i];
          next.insert(next.end(), child.begin(), child.end());
        }
        std::size_t i = 0;
        while (i < n && ++u[i] == p) u[i++] = 0;
        if (i == n) break;
      }
      if (next.size() / n > width_cap) {
        out.status = LocalStatus::Unknown;
        return out;
      }
    }
    if (j + 1 == e) {  // no state had a child at the final level
      out.status = LocalStatus::Obstructed;
      out.death = e;
      return out;
    }
    states.swap(next);
    pj = pj1;
  }
}

}  // namespace

LocalDecision solvable_mod_prime_power(const QuadForm& q, const Int& target, const Int& p,
                                       unsigned e, std::size_t width_cap) {
  if (e == 0) return {LocalStatus::Solvable, 0};
  if (p < 2) throw InputError("solvable_mod_prime_power: p must be at least 2");
  // int64 fast path requires p^e to fit; desk-scale sweeps always do
  if (!p.fits_slong_p()) throw InputError("solvable_mod_prime_power: prime too large");
  int64_t p64 = p.get_si();
  {
    Int pe = int_pow(p, e);
    if (mpz_sizeinbase(pe.get_mpz_t(), 2) > 60)
      throw InputError("solvable_mod_prime_power: modulus exceeds 2^60");
  }

  PrimitiveScan prim = primitive_scan(q, target, p64, e, width_cap);
  if (prim.status == LocalStatus::Solvable) return {LocalStatus::Solvable, 0};

  // imprimitive branch: x = p y, so q(y) == target / p^2 at depth e - 2
  LocalDecision imprim;
  Int pe = int_pow(p, std::min(e, 2u));
  if (e <= 2) {
    if (mod_floor(target, pe) == 0) return {LocalStatus::Solvable, 0};
    unsigned death = mod_floor(target, p) != 0 ? 1 : 2;
    imprim = {LocalStatus::Obstructed, death};
  } else if (mod_floor(target, p * p) == 0) {
    imprim = solvable_mod_prime_power(q, target / (p * p), p, e - 2, width_cap);
    if (imprim.status == LocalStatus::Obstructed) imprim.level += 2;
  } else {
    unsigned death = mod_floor(target, p) != 0 ? 1 : 2;
    imprim = {LocalStatus::Obstructed, death};
  }

  if (imprim.status == LocalStatus::Solvable) return {LocalStatus::Solvable, 0};
  if (prim.status == LocalStatus::Unknown || imprim.status == LocalStatus::Unknown)
    return {LocalStatus::Unknown, 0};
  // both branches dead: unsolvable from the level where the later one dies
  return {LocalStatus::Obstructed, std::max(prim.death, imprim.level)};
}

bool local_obstruction(const QuadForm& q, const Int& target, const Int& modulus,
                       std::size_t budget) {
  if (modulus < 2) throw InputError("local_obstruction: modulus must be at least 2");
  std::size_t n = q.vars();
  if (!modulus.fits_slong_p()) throw BudgetExceededError("local_obstruction: modulus too large");
  int64_t m = modulus.get_si();
  Int cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= modulus;
  if (cells > Int((unsigned long)budget))
    throw BudgetExceededError("local_obstruction: residue space exceeds sweep budget");
  QMod qm(q, m);
  int64_t t = (int64_t)mod_floor(target, modulus).get_ui();
  IVec x(n, 0);
  while (true) {
    if (qm.eval(x.data()) == t) return false;
    std::size_t i = 0;
    while (i < n && ++x[i] == m) x[i++] = 0;
    if (i == n) break;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> primes;
  n = abs(n);
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<Int> divisors_ascending(const Int& n) {
  std::vector<Int> divs{1};
  Int m = abs(n);
  for (const Int& p : prime_factors(m)) {
    Int pk = p;
    std::size_t base = divs.size();
    while (m % pk == 0) {
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      pk *= p;
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

unsigned ord_p(Int n, const Int& p) {
  unsigned o = 0;
  n = abs(n);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++o;
  }
  return o;
}

// exact solutions of q(x) == target with sup-norm at most radius: outer
// coordinates sweep, the first coordinate is solved as an integer quadratic
bool bounded_representation_search(const QuadForm& q, const Int& target, const Int& radius,
                                   const std::function<bool(const IntVec&)>& accept) {
  std::size_t n = q.vars();
  if (n == 0) return false;
  IntVec x(n, Int(0));
  // small shells first: real roots are short in practice
  Int quick = radius < 8 ? radius : Int(8);
  for (Int shell = 0; shell <= quick; ++shell) {
    IntVec y(n, -shell);
    while (true) {
      bool on_shell = false;
      for (const Int& v : y)
        if (abs(v) == shell) on_shell = true;
      if (on_shell && q.eval(y) == target && accept(y)) return true;
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (y[i] < shell) {
          ++y[i];
          for (std::size_t j = i + 1; j < n; ++j) y[j] = -shell;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  if (radius <= quick) return false;
  // full range: iterate x[1..n-1], solve x[0]
  for (std::size_t i = 1; i < n; ++i) x[i] = -radius;
  while (true) {
    // a x0^2 + b x0 + c == target
    Int a = q.coeff(0, 0);
    Int b = 0, c = -target;
    for (std::size_t i = 1; i < n; ++i) {
      b += q.coeff(0, i) * x[i];
      c += q.coeff(i, i) * x[i] * x[i];
      for (std::size_t j = i + 1; j < n; ++j) c += q.coeff(i, j) * x[i] * x[j];
    }
    if (a == 0) {
      if (b != 0 && c % b == 0) {
        Int x0 = -c / b;
        if (abs(x0) <= radius) {
          x[0] = x0;
          if (accept(x)) return true;
        }
      } else if (b == 0 && c == 0) {
        for (Int x0 = -radius; x0 <= radius; ++x0) {
          x[0] = x0;
          if (accept(x)) return true;
        }
      }
    } else {
      Int disc = b * b - 4 * a * c;
      Int s;
      if (disc >= 0 && is_perfect_square(disc, &s)) {
        for (int sign = -1; sign <= 1; sign += 2) {
          Int num = -b + sign * s;
          if (num % (2 * a) != 0) continue;
          Int x0 = num / (2 * a);
          if (abs(x0) > radius) continue;
          x[0] = x0;
          if (accept(x)) return true;
          if (s == 0) break;
        }
      }
    }
    std::size_t i = 1;
    while (i < n && ++x[i] > radius) x[i++] = -radius;
    if (i == n) break;
  }
  return false;
}

// small box scan for an exact integral representation q(x) == target
bool find_witness(const QuadForm& q, const Int& target, const Int& radius, IntVec* out) {
  return bounded_representation_search(q, target, radius, [&](const IntVec& x) {
    if (out) *out = x;
    return true;
  });
}

struct Obstruction {
  Int modulus;
  unsigned level;
};

// smallest obstructing prime-power modulus across the swept primes, if any
std::optional<Obstruction> scan_obstructions(const QuadForm& q, const Int& target,
                                             const std::vector<Int>& primes,
                                             const Int& depth_seed, std::size_t width_cap) {
  std::optional<Obstruction> best;
  for (const Int& p : primes) {
    unsigned depth = 2 * ord_p(depth_seed, p) + 2;
    // keep the modulus inside the int64 fast path
    unsigned max_depth = 1;
    for (Int m = p; m * p < (Int(1) << 60); m *= p) ++max_depth;
    depth = std::min(depth, max_depth);
    LocalDecision dec = solvable_mod_prime_power(q, target, p, depth, width_cap);
    if (dec.status != LocalStatus::Obstructed) continue;
    Int modulus = int_pow(p, dec.level);
    if (!best || modulus < best->modulus) best = Obstruction{modulus, dec.level};
  }
  return best;
}

std::vector<Int> sweep_primes(const QuadraticLattice& lattice, const Int& k,
                              const QuadForm& reduced) {
  Int seed = 2 * abs(det(lattice.gram())) * k * abs(det(reduced.gram2()));
  return prime_factors(seed);
}

}  // namespace

std::vector<DivisorEntry> sieve_divisors(const QuadraticLattice& lattice,
                                         const SieveOptions& opts) {
  std::vector<Int> inv = invariant_factors(lattice.gram());
  Int bound = 2 * inv.back();
  Int detg = abs(det(lattice.gram()));
  QuadForm f = QuadForm::from_gram(lattice.gram());
  std::vector<DivisorEntry> entries;
  for (const Int& k : divisors_ascending(bound)) {
    DivisorEntry entry;
    entry.k = k;
    if (find_witness(f, k, opts.witness_radius, nullptr)) {
      entry.survived = true;
    } else {
      Int depth_seed = 2 * detg * k;
      auto obstruction =
          scan_obstructions(f, k, prime_factors(depth_seed), depth_seed, opts.width_cap);
      if (obstruction) {
        entry.survived = false;
        entry.modulus = obstruction->modulus;
      } else {
        entry.survived = true;  // unobstructed (or undecided): must keep
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<Int> root_norm_candidates(const QuadraticLattice& lattice,
                                      const SieveOptions& opts) {
  std::vector<Int> out;
  for (const DivisorEntry& e : sieve_divisors(lattice, opts))
    if (e.survived) out.push_back(e.k);
  return out;
}

CrystallographicSublattice crystallographic_sublattice(const QuadraticLattice& lattice,
                                                       const Int& k) {
  if (k <= 0) throw InvalidNormError("crystallographic_sublattice: norm must be positive");
  std::size_t n = lattice.dim();
  // 2 G x == k y: kernel of [2G | -kI] projected to x
  IntMat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 2 * lattice.gram()(i, j);
    m(i, n + i) = -k;
  }
  IntMat ker = integer_kernel(m);
  IntMat xpart(n, ker.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) xpart(i, j) = ker(i, j);
  IntMat basis_full = column_hnf(xpart).h;
  // kernel projects onto a rank-n sublattice (k Z^n is always inside)
  IntMat basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = basis_full(i, j);
  QuadForm restricted = QuadForm::restricted(lattice.gram(), basis);
  Int c = restricted.content();
  return {basis, c, restricted.divided_by(c)};
}

std::string to_string(NormOutcomeKind k) {
  switch (k) {
    case NormOutcomeKind::EliminatedByDivisibility:
      return "eliminated-by-divisibility";
    case NormOutcomeKind::EliminatedLocally:
      return "eliminated-locally";
    case NormOutcomeKind::EliminatedByReduction:
      return "eliminated-by-reduction";
    case NormOutcomeKind::RootFound:
      return "root-found";
    case NormOutcomeKind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

NoRootsCertificate certify_no_roots(const QuadraticLattice& lattice, const SieveOptions& opts) {
  NoRootsCertificate cert;
  Int detg = abs(det(lattice.gram()));
  for (const DivisorEntry& pre : sieve_divisors(lattice, opts)) {
    NormOutcome outcome;
    outcome.k = pre.k;
    if (!pre.survived) {
      outcome.kind = NormOutcomeKind::EliminatedLocally;
      outcome.modulus = pre.modulus;
      outcome.target = pre.k;
      cert.entries.push_back(std::move(outcome));
      continue;
    }
    CrystallographicSublattice sub = crystallographic_sublattice(lattice, pre.k);
    outcome.sublattice = sub;
    if (mod_floor(pre.k, sub.content) != 0) {
      // every value of the restricted form is a multiple of the content
      outcome.kind = NormOutcomeKind::EliminatedByDivisibility;
      cert.entries.push_back(std::move(outcome));
      continue;
    }
    Int target = pre.k / sub.content;
    outcome.target = target;
    auto obstruction = scan_obstructions(sub.reduced, target,
                                         sweep_primes(lattice, pre.k, sub.reduced),
                                         2 * detg * pre.k, opts.width_cap);
    if (obstruction) {
      outcome.kind = NormOutcomeKind::EliminatedByReduction;
      outcome.modulus = obstruction->modulus;
      cert.entries.push_back(std::move(outcome));
      continue;
    }
    IntVec found;
    bool hit = bounded_representation_search(
        sub.reduced, target, opts.search_radius, [&](const IntVec& params) {
          IntVec r = sub.basis * params;
          if (!is_root(lattice, r).accepted) return false;
          found = r;
          return true;
        });
    if (hit) {
      outcome.kind = NormOutcomeKind::RootFound;
      outcome.root = found;
      cert.entries.push_back(std::move(outcome));
      cert.verdict = NoRootsCertificate::Verdict::RootFound;
      cert.root = found;
      return cert;
    }
    outcome.kind = NormOutcomeKind::Inconclusive;
    cert.entries.push_back(std::move(outcome));
    cert.inconclusive.push_back(pre.k);
  }
  cert.verdict = cert.inconclusive.empty() ? NoRootsCertificate::Verdict::NoRoots
                                           : NoRootsCertificate::Verdict::Inconclusive;
  return cert;
}

}  // namespace vinberg
