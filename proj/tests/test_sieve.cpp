#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/sieve.hpp"

using namespace vinberg;

namespace {

QuadForm form_from_coeffs(std::size_t n, const std::vector<long>& coeffs) {
  QuadForm q(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++idx) q.coeff(i, j) = coeffs[idx];
  return q;
}

}  // namespace

TEST_CASE("local obstruction examples") {
  // q = 49 m2^2 + 14 m1 m3 - 28 m2 m3 + 6 m3^2; residues of 6 m3^2 mod 7
  QuadForm q = form_from_coeffs(3, {0, 0, 14, 49, -28, 6});
  std::set<Int> residues;
  for (long m3 = 0; m3 < 7; ++m3) residues.insert(mod_floor(Int(6 * m3 * m3), Int(7)));
  CHECK(residues == std::set<Int>{0, 3, 5, 6});
  CHECK(local_obstruction(q, Int(1), Int(7)));
  CHECK(local_obstruction(q, Int(2), Int(7)));
  CHECK_FALSE(local_obstruction(q, Int(6), Int(7)));

  QuadForm sum_of_squares = form_from_coeffs(2, {1, 0, 1});
  CHECK(local_obstruction(sum_of_squares, Int(3), Int(4)));

  QuadForm square = form_from_coeffs(1, {1});
  CHECK_FALSE(local_obstruction(square, Int(1), Int(3)));
}

TEST_CASE("prime power solvability agrees with exhaustive sweeps") {
  oracles::Rng rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    QuadForm q(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) q.coeff(i, j) = rng.range(-8, 8);
    Int p = (iter % 2 == 0) ? Int(2) : Int(7);
    unsigned e = (unsigned)rng.range(1, 3);
    Int target(rng.range(-20, 20));
    LocalDecision fast = solvable_mod_prime_power(q, target, p, e);
    bool obstructed = local_obstruction(q, target, int_pow(p, e));
    if (obstructed) {
      CHECK(fast.status == LocalStatus::Obstructed);
      CHECK(int_pow(p, fast.level) <= int_pow(p, e));
      // replay at the recorded minimal level
      CHECK(local_obstruction(q, target, int_pow(p, fast.level)));
      if (fast.level > 1) CHECK_FALSE(local_obstruction(q, target, int_pow(p, fast.level - 1)));
    } else {
      CHECK(fast.status == LocalStatus::Solvable);
    }
  }
}

TEST_CASE("prime power solvability: pathological forms and deeper moduli") {
  oracles::Rng rng(20240);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = (std::size_t)rng.range(1, 3);
    QuadForm q(n);
    int style = (int)rng.range(0, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long c = rng.range(-9, 9);
        if (style == 1) c *= 7;           // content divisible by p
        if (style == 2) c = (c / 3) * 49; // deeper degeneracy
        if (style == 3 && (i + j) % 2) c = 0;
        q.coeff(i, j) = c;
      }
    Int p = (iter % 3 == 0) ? Int(2) : ((iter % 3 == 1) ? Int(3) : Int(7));
    unsigned e = (unsigned)rng.range(1, p == 2 ? 6 : 3);
    Int target(rng.range(-100, 100));
    LocalDecision fast = solvable_mod_prime_power(q, target, p, e);
    if (fast.status == LocalStatus::Unknown) continue;  // cap hit: no claim made
    bool obstructed = local_obstruction(q, target, int_pow(p, e));
    CHECK((fast.status == LocalStatus::Obstructed) == obstructed);
    if (fast.status == LocalStatus::Obstructed) {
      CHECK(local_obstruction(q, target, int_pow(p, fast.level)));
      if (fast.level > 1)
        CHECK_FALSE(local_obstruction(q, target, int_pow(p, fast.level - 1)));
    }
  }
}

TEST_CASE("root norm candidates of the three fixtures") {
  CHECK(root_norm_candidates(fixtures::lattice_b()) ==
        std::vector<Int>{49, 98, 2401, 4802});

  std::vector<Int> diag = root_norm_candidates(fixtures::lattice_diag_11m1());
  for (const Int& k : diag) CHECK((k == 1 || k == 2));

  std::vector<Int> a = root_norm_candidates(fixtures::lattice_a());
  CHECK(a == std::vector<Int>{49, 98});
  for (const Int& k : a) CHECK(98 % k == 0);
}

TEST_CASE("crystallographic sublattice of the rootless lattice at norm 49") {
  CrystallographicSublattice sub = crystallographic_sublattice(fixtures::lattice_b(), Int(49));
  CHECK(sub.content == 49);

  // the published parametrization k1 = m1, k2 = 7 m2 - 3 m3, k3 = 7 m3
  IntMat paper_basis{{1, 0, 0}, {0, 7, -3}, {0, 0, 7}};
  // same sublattice: equal column HNFs
  CHECK(column_hnf(sub.basis).h == column_hnf(paper_basis).h);

  // change of parameters T with sub.basis * T == paper_basis must be
  // unimodular, and must carry the reduced form onto the published q
  IntMat adj = adjugate(sub.basis);
  Int d = det(sub.basis);
  IntMat t_scaled = adj * paper_basis;
  IntMat t(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      REQUIRE(t_scaled(i, j) % d == 0);
      t(i, j) = t_scaled(i, j) / d;
    }
  Int dt = det(t);
  CHECK((dt == 1 || dt == -1));
  QuadForm paper_q = form_from_coeffs(3, {0, 0, 14, 49, -28, 6});
  CHECK(t.transposed() * sub.reduced.gram2() * t == paper_q.gram2());

  // the reduced form misses 1 modulo 7
  CHECK(local_obstruction(sub.reduced, Int(1), Int(7)));
}

TEST_CASE("crystallographic sublattice at norm 1 is the whole lattice") {
  CrystallographicSublattice sub = crystallographic_sublattice(fixtures::lattice_diag_11m1(), Int(1));
  CHECK(abs(det(sub.basis)) == 1);
  CHECK(sub.content == 1);
}

TEST_CASE("norm-49 roots of the known lattice appear in its sublattice") {
  CrystallographicSublattice sub = crystallographic_sublattice(fixtures::lattice_a(), Int(49));
  // v1 = (0,7,-1) must be basis * m for integral m with reduced(m) = 49/content
  IntMat adj = adjugate(sub.basis);
  Int d = det(sub.basis);
  IntVec v1{Int(0), Int(7), Int(-1)};
  IntVec scaled_params = adj * v1;
  IntVec params(3);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(scaled_params[i] % d == 0);
    params[i] = scaled_params[i] / d;
  }
  CHECK(sub.reduced.eval(params) * sub.content == 49);
}

TEST_CASE("no-roots certification of the rootless lattice") {
  NoRootsCertificate cert = certify_no_roots(fixtures::lattice_b());
  CHECK(cert.verdict == NoRootsCertificate::Verdict::NoRoots);
  // complete: one entry per divisor of 4802
  std::vector<Int> expected_norms = divisors_ascending(Int(4802));
  REQUIRE(cert.entries.size() == expected_norms.size());
  for (std::size_t i = 0; i < cert.entries.size(); ++i)
    CHECK(cert.entries[i].k == expected_norms[i]);
  for (const NormOutcome& e : cert.entries) {
    CHECK(e.kind != NormOutcomeKind::RootFound);
    CHECK(e.kind != NormOutcomeKind::Inconclusive);
    if (e.kind == NormOutcomeKind::EliminatedLocally ||
        e.kind == NormOutcomeKind::EliminatedByReduction) {
      CHECK(e.modulus >= 2);
    }
  }
  // the four surviving divisors eliminate through their reduced forms, mod 7
  for (const NormOutcome& e : cert.entries)
    if (e.k == 49 || e.k == 98 || e.k == 2401 || e.k == 4802) {
      CHECK(e.kind == NormOutcomeKind::EliminatedByReduction);
      CHECK(e.modulus == 7);
    }
}

TEST_CASE("eliminated-locally entries replay") {
  NoRootsCertificate cert = certify_no_roots(fixtures::lattice_b());
  QuadForm f = QuadForm::from_gram(fixtures::lattice_b().gram());
  for (const NormOutcome& e : cert.entries) {
    if (e.kind == NormOutcomeKind::EliminatedLocally) {
      // replay by exhaustive residue sweep where feasible
      if (e.modulus <= 343) CHECK(local_obstruction(f, e.target, e.modulus));
      Int p = prime_factors(e.modulus)[0];
      unsigned level = 0;
      Int m = e.modulus;
      while (m > 1) {
        m /= p;
        ++level;
      }
      LocalDecision dec = solvable_mod_prime_power(f, e.target, p, level);
      CHECK(dec.status == LocalStatus::Obstructed);
    }
    if (e.kind == NormOutcomeKind::EliminatedByReduction) {
      REQUIRE(e.sublattice.has_value());
      CHECK(local_obstruction(e.sublattice->reduced, e.target, e.modulus));
    }
  }
}

TEST_CASE("root search certifies lattices that do have roots") {
  NoRootsCertificate diag = certify_no_roots(fixtures::lattice_diag_11m1());
  REQUIRE(diag.verdict == NoRootsCertificate::Verdict::RootFound);
  CHECK(is_root(fixtures::lattice_diag_11m1(), diag.root).accepted);
  CHECK(fixtures::lattice_diag_11m1().norm(diag.root) == 1);

  NoRootsCertificate a = certify_no_roots(fixtures::lattice_a());
  REQUIRE(a.verdict == NoRootsCertificate::Verdict::RootFound);
  CHECK(is_root(fixtures::lattice_a(), a.root).accepted);
}

TEST_CASE("sublattice bases satisfy the congruences and have the right index") {
  for (const auto* lattice : {&fixtures::lattice_a(), &fixtures::lattice_b()}) {
    for (const Int& k : root_norm_candidates(*lattice)) {
      CrystallographicSublattice sub = crystallographic_sublattice(*lattice, k);
      for (std::size_t j = 0; j < sub.basis.cols(); ++j) {
        IntVec col = sub.basis.col(j);
        IntVec gcol = lattice->gram() * col;
        for (const Int& entry : gcol) CHECK(mod_floor(2 * entry, k) == 0);
      }
      // k Z^n always solves the congruences, so the index divides k^n
      Int index = abs(det(sub.basis));
      CHECK(index > 0);
      CHECK(mod_floor(int_pow(k, 3), index) == 0);
    }
  }
}

TEST_CASE("eliminations are sound: no box root of an eliminated norm exists") {
  oracles::Rng rng(31337);
  int checked = 0;
  while (checked < 12) {
    IntMat gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        gram(i, j) = rng.range(-4, 4);
        gram(j, i) = gram(i, j);
      }
    if (!(signature(gram) == Signature{2, 1, 0})) continue;
    QuadraticLattice lattice{gram};
    SieveOptions opts;
    opts.search_radius = 50;
    NoRootsCertificate cert = certify_no_roots(lattice, opts);
    if (cert.verdict == NoRootsCertificate::Verdict::RootFound)
      CHECK(is_root(lattice, cert.root).accepted);
    Int bound = 2 * invariant_factors(lattice.gram()).back();
    // brute-force roots in a small box; their norms must divide the bound
    // and must never carry an elimination in the certificate
    IntVec x(3, Int(-6));
    while (true) {
      if (!is_zero(x) && is_root(lattice, x).accepted) {
        Int k = lattice.norm(x);
        CHECK(mod_floor(bound, k) == 0);
        for (const NormOutcome& e : cert.entries)
          if (e.k == k) {
            CHECK(e.kind != NormOutcomeKind::EliminatedLocally);
            CHECK(e.kind != NormOutcomeKind::EliminatedByReduction);
            CHECK(e.kind != NormOutcomeKind::EliminatedByDivisibility);
          }
      }
      std::size_t i = 3;
      bool done = true;
      while (i > 0) {
        --i;
        if (x[i] < 6) {
          ++x[i];
          for (std::size_t j = i + 1; j < 3; ++j) x[j] = -6;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    ++checked;
  }
}

TEST_CASE("divisor helper") {
  CHECK(divisors_ascending(Int(4802)) ==
        std::vector<Int>{1, 2, 7, 14, 49, 98, 343, 686, 2401, 4802});
  CHECK(prime_factors(Int(4802)) == std::vector<Int>{2, 7});
}
