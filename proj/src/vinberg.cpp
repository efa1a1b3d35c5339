#include "vinberg/vinberg.hpp"

#include <algorithm>
#include <functional>

#include "vinberg/enumerate.hpp"
#include "vinberg/sieve.hpp"

namespace vinberg {

namespace {

// sup-norm shells, ascending lex inside a shell; the first vector accepted by
// `pred` wins. Deterministic by construction.
std::optional<IntVec> shell_search(std::size_t dim, const Int& shell_cap,
                                   const std::function<bool(const IntVec&)>& pred) {
  for (Int shell = 1; shell <= shell_cap; ++shell) {
    IntVec x(dim, -shell);
    while (true) {
      bool on_shell = false;
      for (const Int& v : x)
        if (abs(v) == shell) on_shell = true;
      if (on_shell && pred(x)) return x;
      std::size_t i = dim;
      bool done = true;
      while (i > 0) {
        --i;
        if (x[i] < shell) {
          ++x[i];
          for (std::size_t j = i + 1; j < dim; ++j) x[j] = -shell;
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  return std::nullopt;
}

void normalize_sign(IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

}  // namespace

IntVec select_basepoint(const QuadraticLattice& lattice,
                        const std::optional<IntVec>& override_vector) {
  if (override_vector) {
    if (override_vector->size() != lattice.dim())
      throw DimensionMismatchError("basepoint length != lattice dimension");
    if (lattice.norm(*override_vector) >= 0)
      throw InputError("basepoint override must have negative norm");
    return *override_vector;
  }
  auto found = shell_search(lattice.dim(), Int(10000), [&](const IntVec& v) {
    return lattice.norm(v) < 0;
  });
  if (!found) throw Error("no negative-norm vector found");  // unreachable: form is Lorentzian
  IntVec v = *found;
  normalize_sign(v);
  return v;
}

Rat root_weight(const QuadraticLattice& lattice, const IntVec& v0, const IntVec& e) {
  Int inner = lattice.inner(e, v0);
  Rat w(inner * inner, lattice.norm(e));
  w.canonicalize();
  return w;
}

std::vector<IntVec> enumerate_level(const QuadraticLattice& lattice, const IntVec& v0,
                                    const Int& k, const Int& n) {
  if (k <= 0) throw InvalidNormError("enumerate_level: norm must be positive");
  if (n < 0) throw InputError("enumerate_level: level must be nonnegative");
  if (lattice.norm(v0) >= 0) throw InputError("enumerate_level: basepoint norm must be negative");
  std::size_t dim = lattice.dim();
  IntVec g = lattice.gram() * v0;
  // particular solution of e.g == -n
  IntMat grow(1, dim);
  for (std::size_t i = 0; i < dim; ++i) grow(0, i) = g[i];
  IntVec particular;
  if (!solve_integer(grow, {-n}, &particular)) return {};
  IntMat basis = integer_kernel(grow);  // rank dim-1, spans v0^perp
  // quadratic in the kernel coordinates: (e* + B y, e* + B y) == k
  IntMat a = basis.transposed() * lattice.gram() * basis;
  IntVec b = basis.transposed() * (lattice.gram() * particular);
  Int c = lattice.norm(particular) - k;
  std::vector<IntVec> out;
  for (const IntVec& y : solve_definite_quadric(a, b, c)) out.push_back(particular + basis * y);
  std::sort(out.begin(), out.end());
  return out;
}

VinbergState::VinbergState(const QuadraticLattice& lattice, IntVec basepoint,
                           std::vector<Int> candidate_norms)
    : lattice_(&lattice),
      basepoint_(std::move(basepoint)),
      candidate_norms_(std::move(candidate_norms)) {
  basepoint_norm_ = lattice.norm(basepoint_);
  if (basepoint_norm_ >= 0) throw InputError("basepoint must have negative norm");
  for (const Int& k : candidate_norms_) frontier_[k] = 1;
}

void VinbergState::accept(Root root, Rat weight) {
  accepted_.push_back(std::move(root));
  weights_.push_back(std::move(weight));
}

std::vector<Root> initial_chamber(VinbergState& state, const std::vector<IntVec>& seeds) {
  const QuadraticLattice& lattice = state.lattice();
  if (!state.accepted_.empty()) throw Error("initial_chamber: state already initialized");

  std::vector<Root> chamber;
  for (const IntVec& s : seeds) {
    RootCheck check = is_root(lattice, s);
    if (!check.accepted)
      throw InconsistentSeedsError("seed is not a root: " + to_string(*check.reason));
    chamber.emplace_back(lattice, s);
  }
  for (std::size_t i = 0; i < chamber.size(); ++i)
    for (std::size_t j = i + 1; j < chamber.size(); ++j) {
      if (lattice.inner(chamber[i].vector(), chamber[j].vector()) > 0)
        throw InconsistentSeedsError("seeds are mutually obtuse");
      if (chamber[i].vector() == chamber[j].vector() ||
          chamber[i].vector() == scaled(chamber[j].vector(), Int(-1)))
        throw InconsistentSeedsError("seeds share a mirror");
    }

  // all roots orthogonal to the basepoint, by (norm, lex)
  std::vector<Root> orthogonal;
  for (const Int& k : state.candidate_norms_)
    for (const IntVec& e : enumerate_level(lattice, state.basepoint_, k, 0))
      if (is_root(lattice, e).accepted) orthogonal.emplace_back(lattice, e);

  if (!seeds.empty()) {
    // keep orthogonal roots compatible with the seeds and with each other;
    // a root and its negative share a mirror, so only one may enter
    for (const Root& e : orthogonal) {
      bool ok = true;
      for (const Root& r : chamber) {
        if (lattice.inner(e.vector(), r.vector()) > 0) ok = false;
        if (e.vector() == scaled(r.vector(), Int(-1))) ok = false;
      }
      if (ok) chamber.push_back(e);
    }
  } else {
    // lexicographically positive roots form the positive system; the simple
    // system is its indecomposable part, taken with inward sign
    std::vector<Root> positives;
    for (const Root& e : orthogonal) {
      IntVec v = e.vector();
      for (const Int& x : v) {
        if (x == 0) continue;
        if (x > 0) positives.push_back(e);
        break;
      }
    }
    for (const Root& e : positives) {
      bool decomposable = false;
      for (const Root& p : positives) {
        if (decomposable) break;
        for (const Root& q : positives)
          if (p.vector() + q.vector() == e.vector()) {
            decomposable = true;
            break;
          }
      }
      if (!decomposable) chamber.emplace_back(lattice, scaled(e.vector(), Int(-1)));
    }
  }

  // stage-0 acceptance order: weight, then norm, then vector
  std::vector<std::pair<Rat, std::size_t>> order;
  for (std::size_t i = 0; i < chamber.size(); ++i)
    order.emplace_back(root_weight(lattice, state.basepoint_, chamber[i].vector()), i);
  std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    const Root& a = chamber[x.second];
    const Root& b = chamber[y.second];
    if (a.norm() != b.norm()) return a.norm() < b.norm();
    return a.vector() < b.vector();
  });
  std::vector<Root> result;
  for (const auto& [w, i] : order) {
    state.accept(chamber[i], w);
    result.push_back(chamber[i]);
  }
  state.stage0_count_ = result.size();
  return result;
}

Root next_root(VinbergState& state, const std::optional<Rat>& weight_ceiling) {
  const QuadraticLattice& lattice = state.lattice();
  while (true) {
    if (state.pending_.empty()) {
      // advance the frontier at the level of smallest weight (ties: smaller k)
      const Int* best_k = nullptr;
      Rat best_w;
      for (const auto& [k, n] : state.frontier_) {
        Rat w(n * n, k);
        w.canonicalize();
        if (!best_k || w < best_w) {
          best_k = &k;
          best_w = w;
        }
      }
      if (!best_k) throw ExhaustedError(Rat(0));  // no candidate norms at all
      if (weight_ceiling && best_w > *weight_ceiling) throw ExhaustedError(*weight_ceiling);
      Int k = *best_k;
      Int n = state.frontier_[k];
      state.frontier_[k] = n + 1;
      for (IntVec& e : enumerate_level(lattice, state.basepoint_, k, n))
        state.pending_.push_back(std::move(e));
      state.pending_weight_ = best_w;
      continue;
    }
    IntVec e = std::move(state.pending_.front());
    state.pending_.pop_front();
    if (!is_root(lattice, e).accepted) continue;
    bool compatible = true;
    for (const Root& r : state.accepted_)
      if (lattice.inner(e, r.vector()) > 0) {
        compatible = false;
        break;
      }
    if (!compatible) continue;
    Root root(lattice, e);
    state.accept(root, state.pending_weight_);
    return root;
  }
}

namespace {

IntVec seeded_basepoint(const QuadraticLattice& lattice, const std::vector<IntVec>& seeds) {
  auto found = shell_search(lattice.dim(), Int(10000), [&](const IntVec& v) {
    if (lattice.norm(v) >= 0) return false;
    for (const IntVec& s : seeds)
      if (lattice.inner(s, v) > 0) return false;
    return true;
  });
  if (!found)
    throw InconsistentSeedsError("no basepoint compatible with the seeds within the search cap");
  return *found;
}

bool chamber_has_finite_volume(const VinbergState& state) {
  if (state.accepted().size() < state.lattice().hyperbolic_dim() + 1) return false;
  CoxeterScheme scheme = build_scheme(state.lattice(), state.accepted());
  return finite_volume_check(scheme).finite;
}

}  // namespace

RunResult run(const QuadraticLattice& lattice, const StopCriterion& stop,
              const RunOptions& options) {
  IntVec basepoint;
  if (options.basepoint)
    basepoint = select_basepoint(lattice, options.basepoint);
  else if (!options.seeds.empty())
    basepoint = seeded_basepoint(lattice, options.seeds);
  else
    basepoint = select_basepoint(lattice);

  VinbergState state(lattice, basepoint, root_norm_candidates(lattice));
  initial_chamber(state, options.seeds);

  std::optional<Rat> ceiling = options.max_weight;
  if (stop.kind == StopCriterion::Kind::WeightCeiling)
    ceiling = ceiling ? std::min(*ceiling, stop.ceiling) : stop.ceiling;

  RunResult result{std::move(state), false};
  while (true) {
    switch (stop.kind) {
      case StopCriterion::Kind::Count:
        if (result.state.accepted().size() >= stop.count) return result;
        break;
      case StopCriterion::Kind::VolumeTermination:
        if (chamber_has_finite_volume(result.state)) {
          result.reflective = true;
          return result;
        }
        break;
      case StopCriterion::Kind::WeightCeiling:
        break;
    }
    try {
      next_root(result.state, ceiling);
    } catch (const ExhaustedError&) {
      if (stop.kind == StopCriterion::Kind::WeightCeiling &&
          (!options.max_weight || stop.ceiling <= *options.max_weight))
        return result;  // the stop ceiling itself was reached
      throw;
    }
  }
}

}  // namespace vinberg
