#pragma once

#include <deque>
#include <map>
#include <optional>

#include "vinberg/coxeter.hpp"
#include "vinberg/lattice.hpp"

namespace vinberg {

// First negative-norm integer vector in sup-norm shells, ascending
// lexicographic within a shell, sign-normalized so the first nonzero
// coordinate is positive. An explicit override is validated and returned
// unchanged.
IntVec select_basepoint(const QuadraticLattice& lattice,
                        const std::optional<IntVec>& override_vector = std::nullopt);

// All integer e with (e,e) == k and (e,v0) == -n. The orthogonal part ranges
// over a coset of the positive-definite lattice (G v0)^perp, enumerated
// exactly. Ascending lexicographic order.
std::vector<IntVec> enumerate_level(const QuadraticLattice& lattice, const IntVec& v0,
                                    const Int& k, const Int& n);

// Weight (e,v0)^2/(e,e): the exact-rational stand-in for the mirror distance.
Rat root_weight(const QuadraticLattice& lattice, const IntVec& v0, const IntVec& e);

class VinbergState {
 public:
  VinbergState(const QuadraticLattice& lattice, IntVec basepoint,
               std::vector<Int> candidate_norms);

  const QuadraticLattice& lattice() const { return *lattice_; }
  const IntVec& basepoint() const { return basepoint_; }
  const Int& basepoint_norm() const { return basepoint_norm_; }
  const std::vector<Root>& accepted() const { return accepted_; }
  const std::vector<Rat>& weights() const { return weights_; }
  const std::vector<Int>& candidate_norms() const { return candidate_norms_; }
  const std::map<Int, Int>& frontier() const { return frontier_; }
  std::size_t stage0_count() const { return stage0_count_; }

 private:
  friend std::vector<Root> initial_chamber(VinbergState&, const std::vector<IntVec>&);
  friend Root next_root(VinbergState&, const std::optional<Rat>&);

  void accept(Root root, Rat weight);

  const QuadraticLattice* lattice_;
  IntVec basepoint_;
  Int basepoint_norm_;
  std::vector<Int> candidate_norms_;
  std::vector<Root> accepted_;
  std::vector<Rat> weights_;
  std::map<Int, Int> frontier_;  // norm k -> smallest unexplored n
  std::deque<IntVec> pending_;   // current level, lex order
  Rat pending_weight_;
  std::size_t stage0_count_ = 0;
};

// Stage 0: roots orthogonal to the basepoint. With seeds, keeps the seeds
// plus every orthogonal root compatible with them; without, selects the
// simple system of the orthogonal root system cut out by lexicographic
// positivity. Returns the chamber roots in acceptance order.
std::vector<Root> initial_chamber(VinbergState& state,
                                  const std::vector<IntVec>& seeds = {});

// Next accepted root in exact (weight, norm, lex) candidate order; candidates
// obtuse to an accepted root are skipped for good. Throws ExhaustedError when
// the ceiling is passed before any acceptance.
Root next_root(VinbergState& state, const std::optional<Rat>& weight_ceiling = std::nullopt);

struct StopCriterion {
  enum class Kind { Count, WeightCeiling, VolumeTermination };
  Kind kind = Kind::Count;
  std::size_t count = 0;
  Rat ceiling;

  static StopCriterion count_stop(std::size_t m) { return {Kind::Count, m, Rat()}; }
  static StopCriterion weight_stop(const Rat& w) { return {Kind::WeightCeiling, 0, w}; }
  static StopCriterion volume_stop() { return {Kind::VolumeTermination, 0, Rat()}; }
};

struct RunOptions {
  std::vector<IntVec> seeds;
  std::optional<IntVec> basepoint;
  std::optional<Rat> max_weight;  // safety ceiling on top of the stop criterion
};

struct RunResult {
  VinbergState state;
  bool reflective = false;  // volume-termination criterion fired
};

RunResult run(const QuadraticLattice& lattice, const StopCriterion& stop,
              const RunOptions& options = {});

}  // namespace vinberg
