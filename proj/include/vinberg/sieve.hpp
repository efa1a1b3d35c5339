#pragma once

#include <optional>

#include "vinberg/lattice.hpp"
#include "vinberg/quadform.hpp"

namespace vinberg {

// Exhaustive residue sweep: true iff q(x) == target (mod modulus) has no
// solution. Exact but exponential in the variable count; guarded by `budget`
// on the number of residue vectors visited.
bool local_obstruction(const QuadForm& q, const Int& target, const Int& modulus,
                       std::size_t budget = std::size_t(1) << 27);

enum class LocalStatus { Solvable, Obstructed, Unknown };

struct LocalDecision {
  LocalStatus status = LocalStatus::Unknown;
  // minimal j with q == target (mod p^j) unsolvable, when obstructed
  unsigned level = 0;
};

// Decides solvability of q(x) == target (mod p^e) without sweeping the full
// residue space: breadth-first lifting of primitive solution classes with a
// Hensel short circuit, plus the p*x descent for imprimitive classes.
// `width_cap` bounds the tracked classes per level; exceeding it yields
// Unknown (never a false obstruction).
LocalDecision solvable_mod_prime_power(const QuadForm& q, const Int& target, const Int& p,
                                       unsigned e, std::size_t width_cap = 300000);

struct SieveOptions {
  Int witness_radius = 60;     // sup-norm box checked for integral witnesses
  Int search_radius = 10000;   // bounded representation search for roots
  std::size_t width_cap = 300000;
};

struct DivisorEntry {
  Int k;
  bool survived = false;
  // when eliminated by the pre-sieve on the ambient form
  Int modulus;
};

// Divisors of twice the last invariant factor, each kept or eliminated by
// local solvability of f(x) == k at the swept prime-power moduli.
std::vector<DivisorEntry> sieve_divisors(const QuadraticLattice& lattice,
                                         const SieveOptions& opts = {});
std::vector<Int> root_norm_candidates(const QuadraticLattice& lattice,
                                      const SieveOptions& opts = {});

struct CrystallographicSublattice {
  IntMat basis;        // columns span {r : 2(r, b_i) == 0 mod k}, HNF-canonical
  Int content;         // content of the restricted form
  QuadForm reduced;    // restricted form divided by the content
};

// Roots of norm k correspond to `reduced` representing k / content by a
// parameter vector whose image under `basis` is primitive.
CrystallographicSublattice crystallographic_sublattice(const QuadraticLattice& lattice,
                                                       const Int& k);

enum class NormOutcomeKind {
  EliminatedByDivisibility,
  EliminatedLocally,
  EliminatedByReduction,
  RootFound,
  Inconclusive,
};

std::string to_string(NormOutcomeKind k);

struct NormOutcome {
  Int k;
  NormOutcomeKind kind;
  Int modulus;  // local / reduction eliminations
  Int target;   // residue target at that modulus
  std::optional<CrystallographicSublattice> sublattice;
  IntVec root;  // RootFound
};

struct NoRootsCertificate {
  enum class Verdict { NoRoots, RootFound, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::vector<NormOutcome> entries;  // one per divisor of 2 * last invariant factor
  IntVec root;                       // when verdict == RootFound
  std::vector<Int> inconclusive;     // norms neither eliminated nor realized
};

NoRootsCertificate certify_no_roots(const QuadraticLattice& lattice,
                                    const SieveOptions& opts = {});

// Trial-division helpers (desk-scale integers).
std::vector<Int> prime_factors(Int n);
std::vector<Int> divisors_ascending(const Int& n);

}  // namespace vinberg
