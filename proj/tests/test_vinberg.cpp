#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vinberg/sieve.hpp"
#include "vinberg/vinberg.hpp"

using namespace vinberg;

namespace {

std::vector<IntVec> seed_roots_a() {
  const auto& roots = fixtures::known_roots_a();
  return {roots[0], roots[1], roots[2]};
}

std::set<IntVec> up_to_sign(const std::vector<Root>& roots) {
  std::set<IntVec> out;
  for (const Root& r : roots) {
    IntVec v = r.vector();
    IntVec n = scaled(v, Int(-1));
    out.insert(std::min(v, n));
  }
  return out;
}

}  // namespace

TEST_CASE("basepoint selection replays the shell/lex rule") {
  CHECK(select_basepoint(fixtures::lattice_diag_11m1()) == IntVec{Int(0), Int(0), Int(1)});
  CHECK(select_basepoint(fixtures::lattice_a()) == IntVec{Int(1), Int(1), Int(-1)});
  CHECK(fixtures::lattice_a().norm({Int(1), Int(1), Int(-1)}) == -32);

  IntVec override_v{Int(0), Int(0), Int(2)};
  CHECK(select_basepoint(fixtures::lattice_diag_11m1(), override_v) == override_v);
  CHECK_THROWS_AS(select_basepoint(fixtures::lattice_diag_11m1(), IntVec{Int(1), Int(0), Int(0)}),
                  InputError);
}

TEST_CASE("initial chamber of the plane root system has two simple roots") {
  const auto& diag = fixtures::lattice_diag_11m1();
  VinbergState state(diag, select_basepoint(diag), root_norm_candidates(diag));
  std::vector<Root> chamber = initial_chamber(state);
  REQUIRE(chamber.size() == 2);
  // simple system for the orthogonal-plane roots, inward signs, norm order
  CHECK(chamber[0].vector() == IntVec{Int(0), Int(-1), Int(0)});
  CHECK(chamber[1].vector() == IntVec{Int(-1), Int(1), Int(0)});
  CHECK(diag.inner(chamber[0].vector(), chamber[1].vector()) <= 0);
}

TEST_CASE("seeded chamber accepts the three sample seeds") {
  const auto& lattice = fixtures::lattice_a();
  RunResult r = run(lattice, StopCriterion::count_stop(0), {seed_roots_a(), {}, {}});
  CHECK(r.state.accepted().size() == 3);
  std::set<IntVec> got;
  for (const Root& root : r.state.accepted()) got.insert(root.vector());
  for (const IntVec& s : seed_roots_a()) CHECK(got.count(s) == 1);
  // stage-0 only: count 0 adds nothing beyond the chamber
  CHECK(r.state.stage0_count() == 3);
}

TEST_CASE("inconsistent seeds are rejected") {
  const auto& lattice = fixtures::lattice_a();
  VinbergState state(lattice, IntVec{Int(-1), Int(-1), Int(1)}, root_norm_candidates(lattice));
  // not a root
  CHECK_THROWS_AS(initial_chamber(state, {{Int(1), Int(0), Int(0)}}), InconsistentSeedsError);
  VinbergState state2(lattice, IntVec{Int(-1), Int(-1), Int(1)}, root_norm_candidates(lattice));
  // mutually obtuse pair: v1 and -v1
  const auto& roots = fixtures::known_roots_a();
  CHECK_THROWS_AS(initial_chamber(state2, {roots[0], scaled(roots[0], Int(-1))}),
                  InconsistentSeedsError);
}

TEST_CASE("seeded run accepts the fourth known root") {
  const auto& lattice = fixtures::lattice_a();
  RunResult r = run(lattice, StopCriterion::count_stop(16), {seed_roots_a(), {}, {}});
  std::set<IntVec> got = up_to_sign(r.state.accepted());
  IntVec v4 = fixtures::known_roots_a()[3];
  CHECK(got.count(std::min(v4, scaled(v4, Int(-1)))) == 1);
}

TEST_CASE("candidates obtuse to an accepted root are skipped") {
  const auto& lattice = fixtures::lattice_a();
  RunResult r = run(lattice, StopCriterion::count_stop(16), {seed_roots_a(), {}, {}});
  const auto& accepted = r.state.accepted();
  for (std::size_t i = 0; i < accepted.size(); ++i)
    for (std::size_t j = i + 1; j < accepted.size(); ++j)
      CHECK(lattice.inner(accepted[i].vector(), accepted[j].vector()) <= 0);
}

TEST_CASE("the plane lattice terminates with a finite-volume triangle") {
  RunResult r = run(fixtures::lattice_diag_11m1(), StopCriterion::volume_stop());
  CHECK(r.reflective);
  CHECK(r.state.accepted().size() == 3);
}

TEST_CASE("weight monotonicity and determinism of runs") {
  const auto& lattice = fixtures::lattice_a();
  RunOptions opts{seed_roots_a(), {}, {}};
  RunResult r1 = run(lattice, StopCriterion::count_stop(12), opts);
  RunResult r2 = run(lattice, StopCriterion::count_stop(12), opts);
  REQUIRE(r1.state.accepted().size() == 12);
  // determinism: identical sequences
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(r1.state.accepted()[i].vector() == r2.state.accepted()[i].vector());
  // monotone weights
  const auto& w = r1.state.weights();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(w[i] <= w[i + 1]);
  // weights match their definition
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(w[i] ==
          root_weight(lattice, r1.state.basepoint(), r1.state.accepted()[i].vector()));
  // completeness audit: every level below the last accepted weight was explored
  for (const auto& [k, n] : r1.state.frontier()) {
    Rat next_level(n * n, k);
    next_level.canonicalize();
    CHECK(next_level >= w.back());
  }
}

TEST_CASE("weight-ceiling stop keeps exactly the roots under the ceiling") {
  const auto& diag = fixtures::lattice_diag_11m1();
  RunResult tight = run(diag, StopCriterion::weight_stop(Rat(1, 2)));
  CHECK(tight.state.accepted().size() == 2);  // stage-0 chamber only
  RunResult loose = run(diag, StopCriterion::weight_stop(Rat(1)));
  CHECK(loose.state.accepted().size() == 3);  // the triangle closes at weight 1
  for (const Rat& w : loose.state.weights()) CHECK(w <= Rat(1));
}

TEST_CASE("engine invariants hold on random Lorentzian lattices") {
  oracles::Rng rng(555);
  int checked = 0;
  while (checked < 15) {
    IntMat gram(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        gram(i, j) = rng.range(-4, 4);
        gram(j, i) = gram(i, j);
      }
    if (!(signature(gram) == Signature{2, 1, 0})) continue;
    QuadraticLattice lattice{gram};
    RunResult r = run(lattice, StopCriterion::weight_stop(Rat(30)));
    const auto& accepted = r.state.accepted();
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      CHECK(is_root(lattice, accepted[i].vector()).accepted);
      CHECK(lattice.inner(accepted[i].vector(), r.state.basepoint()) <= 0);
      for (std::size_t j = i + 1; j < accepted.size(); ++j)
        CHECK(lattice.inner(accepted[i].vector(), accepted[j].vector()) <= 0);
    }
    for (std::size_t i = 0; i + 1 < r.state.weights().size(); ++i)
      CHECK(r.state.weights()[i] <= r.state.weights()[i + 1]);
    ++checked;
  }
}

TEST_CASE("exhaustion surfaces as an error when the safety cap is tighter than the stop") {
  const auto& lattice = fixtures::lattice_a();
  RunOptions opts{seed_roots_a(), {}, Rat(10)};
  CHECK_THROWS_AS(run(lattice, StopCriterion::count_stop(16), opts), ExhaustedError);
}
