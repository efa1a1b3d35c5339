#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/enumerate.hpp"
#include "vinberg/vinberg.hpp"

using namespace vinberg;

TEST_CASE("definite quadric: circle of radius 5 squared") {
  // x^2 + y^2 = 25
  auto sols = solve_definite_quadric(IntMat{{1, 0}, {0, 1}}, {Int(0), Int(0)}, Int(-25));
  CHECK(sols.size() == 12);  // (+-3,+-4), (+-4,+-3), (+-5,0), (0,+-5)
  for (const IntVec& s : sols) CHECK(s[0] * s[0] + s[1] * s[1] == 25);
}

TEST_CASE("definite quadric in three variables: sphere of radius squared 25") {
  IntMat id3 = IntMat::identity(3);
  auto sols = solve_definite_quadric(id3, {Int(0), Int(0), Int(0)}, Int(-25));
  CHECK(sols.size() == 30);  // classical count of lattice points on this sphere
  for (const IntVec& s : sols)
    CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] == 25);
}

TEST_CASE("level enumeration in a rank-4 lattice") {
  QuadraticLattice l{IntMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}};
  IntVec v0{Int(0), Int(0), Int(0), Int(1)};
  auto level = enumerate_level(l, v0, Int(1), Int(0));
  CHECK(level.size() == 6);  // unit vectors of the orthogonal cube lattice
  for (const IntVec& e : level) {
    CHECK(l.norm(e) == 1);
    CHECK(l.inner(e, v0) == 0);
  }
}

TEST_CASE("definite quadric rejects indefinite input") {
  CHECK_THROWS_AS(solve_definite_quadric(IntMat{{1, 0}, {0, -1}}, {Int(0), Int(0)}, Int(-1)),
                  InputError);
}

TEST_CASE("definite quadric with linear part") {
  // (x-1)^2 + (y+2)^2 = 2  <=>  x^2 + y^2 - 2x + 4y + 3 = 0
  auto sols = solve_definite_quadric(IntMat{{1, 0}, {0, 1}}, {Int(-1), Int(2)}, Int(3));
  CHECK(sols.size() == 4);
  for (const IntVec& s : sols)
    CHECK((s[0] - 1) * (s[0] - 1) + (s[1] + 2) * (s[1] + 2) == 2);
}

TEST_CASE("enumerate_level matches the box oracle on the fixtures") {
  const auto& diag = fixtures::lattice_diag_11m1();
  IntVec v0{Int(0), Int(0), Int(1)};
  auto level = enumerate_level(diag, v0, Int(1), Int(0));
  auto oracle = oracles::box_level_sweep(diag, v0, Int(1), Int(0), 5);
  CHECK(level == oracle);
  CHECK(level.size() == 4);  // (+-1,0,0), (0,+-1,0)

  const auto& a = fixtures::lattice_a();
  IntVec base{Int(1), Int(1), Int(-1)};
  auto level49 = enumerate_level(a, base, Int(49), Int(0));
  bool has_plus = false, has_minus = false;
  for (const IntVec& e : level49) {
    if (e == IntVec{Int(0), Int(0), Int(1)}) has_plus = true;
    if (e == IntVec{Int(0), Int(0), Int(-1)}) has_minus = true;
  }
  CHECK(has_plus);
  CHECK(has_minus);
}

TEST_CASE("enumerate_level output satisfies its defining equations") {
  const auto& a = fixtures::lattice_a();
  IntVec v0{Int(-1), Int(-1), Int(1)};
  for (long k : {49L, 98L})
    for (long n : {0L, 1L, 7L, 49L, 98L})
      for (const IntVec& e : enumerate_level(a, v0, Int(k), Int(n))) {
        CHECK(a.norm(e) == k);
        CHECK(a.inner(e, v0) == -n);
      }
}

TEST_CASE("enumerate_level equals brute-force box sweeps on random Lorentzian lattices") {
  oracles::Rng rng(2024);
  int checked = 0;
  while (checked < 40) {
    IntMat gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        gram(i, j) = rng.range(-5, 5);
        gram(j, i) = gram(i, j);
      }
    Signature sig = signature(gram);
    if (!(sig == Signature{2, 1, 0})) continue;
    QuadraticLattice lattice{gram};
    // small basepoint with negative norm
    IntVec v0;
    bool found = false;
    for (long a = -2; a <= 2 && !found; ++a)
      for (long b = -2; b <= 2 && !found; ++b)
        for (long c = -2; c <= 2 && !found; ++c) {
          IntVec v{Int(a), Int(b), Int(c)};
          if (!is_zero(v) && lattice.norm(v) < 0) {
            v0 = v;
            found = true;
          }
        }
    if (!found) continue;
    Int k(rng.range(1, 6));
    Int n(rng.range(0, 4));
    auto level = enumerate_level(lattice, v0, k, n);
    auto oracle = oracles::box_level_sweep(lattice, v0, k, n, 30);
    // compare within the box; anything farther out must still solve the system
    std::vector<IntVec> inside;
    for (const IntVec& e : level) {
      bool in_box = true;
      for (const Int& x : e)
        if (abs(x) > 30) in_box = false;
      if (in_box) inside.push_back(e);
      CHECK(lattice.norm(e) == k);
      CHECK(lattice.inner(e, v0) == -n);
    }
    CHECK(inside == oracle);
    ++checked;
  }
}

TEST_CASE("definite quadric agrees with box sweeps on random forms") {
  oracles::Rng rng(808);
  int checked = 0;
  while (checked < 40) {
    std::size_t n = (std::size_t)rng.range(2, 3);
    // random positive definite A = B^T B + I
    IntMat b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = rng.range(-3, 3);
    IntMat a = b.transposed() * b;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 1;
    IntVec lin(n);
    for (std::size_t i = 0; i < n; ++i) lin[i] = rng.range(-6, 6);
    Int c(rng.range(-80, 10));
    auto sols = solve_definite_quadric(a, lin, c);
    // oracle: sweep a box wide enough for every solution (A - I is psd, so
    // |x|^2 <= 2|lin||x| + |c| bounds the sup-norm well under 30)
    const long box = 30;
    std::vector<std::vector<long>> al(n, std::vector<long>(n));
    std::vector<long> ll(n);
    for (std::size_t i = 0; i < n; ++i) {
      ll[i] = (long)lin[i].get_si();
      for (std::size_t j = 0; j < n; ++j) al[i][j] = (long)a(i, j).get_si();
    }
    long cl = (long)c.get_si();
    std::vector<IntVec> oracle;
    std::vector<long> x(n, -box);
    while (true) {
      long val = cl;
      for (std::size_t i = 0; i < n; ++i) {
        val += 2 * ll[i] * x[i];
        for (std::size_t j = 0; j < n; ++j) val += al[i][j] * x[i] * x[j];
      }
      if (val == 0) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
        oracle.push_back(v);
      }
      std::size_t i = n;
      bool done = true;
      while (i > 0) {
        --i;
        if (x[i] < box) {
          ++x[i];
          for (std::size_t j = i + 1; j < n; ++j) x[j] = -box;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    std::sort(oracle.begin(), oracle.end());
    for (const IntVec& s : sols)
      for (const Int& v : s) REQUIRE(abs(v) <= box);
    CHECK(sols == oracle);
    ++checked;
  }
}

TEST_CASE("enumerate_level argument validation") {
  const auto& diag = fixtures::lattice_diag_11m1();
  IntVec v0{Int(0), Int(0), Int(1)};
  CHECK_THROWS_AS(enumerate_level(diag, v0, Int(0), Int(0)), InvalidNormError);
  CHECK_THROWS_AS(enumerate_level(diag, v0, Int(-3), Int(0)), InvalidNormError);
  CHECK_THROWS_AS(enumerate_level(diag, IntVec{Int(1), Int(0), Int(0)}, Int(1), Int(0)),
                  InputError);
}
