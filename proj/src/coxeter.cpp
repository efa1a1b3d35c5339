#include "vinberg/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace vinberg {

EdgeLabel edge_label(const QuadraticLattice& lattice, const Root& a, const Root& b) {
  Int inner = lattice.inner(a.vector(), b.vector());
  if (inner > 0) throw ObtuseAngleError("edge_label: inner product positive");
  EdgeLabel label;
  label.inner_sq = inner * inner;
  label.norm_product = a.norm() * b.norm();
  const Int& i2 = label.inner_sq;
  const Int& np = label.norm_product;
  if (i2 == 0) {
    label.kind = EdgeKind::None;
    label.m = 2;
  } else if (4 * i2 == np) {
    label.kind = EdgeKind::Simple;
    label.m = 3;
  } else if (2 * i2 == np) {
    label.kind = EdgeKind::Labeled;
    label.m = 4;
  } else if (4 * i2 == 3 * np) {
    label.kind = EdgeKind::Labeled;
    label.m = 6;
  } else if (i2 == np) {
    label.kind = EdgeKind::Bold;
    label.m = 0;
  } else if (i2 > np) {
    label.kind = EdgeKind::Dotted;
    label.m = 0;
  } else {
    // cos^2 of a rational-Gram mirror pair never equals any other pi/m value
    throw InvalidDihedralAngleError("edge_label: angle is not pi/2, pi/3, pi/4 or pi/6");
  }
  return label;
}

CoxeterScheme::CoxeterScheme(const QuadraticLattice& lattice, std::vector<Root> roots)
    : roots_(std::move(roots)), d_(lattice.hyperbolic_dim()) {
  std::size_t n = roots_.size();
  root_gram_ = IntMat(n, n);
  edges_.assign(n, std::vector<EdgeLabel>(n));
  for (std::size_t i = 0; i < n; ++i) {
    root_gram_(i, i) = roots_[i].norm();
    for (std::size_t j = i + 1; j < n; ++j) {
      root_gram_(i, j) = lattice.inner(roots_[i].vector(), roots_[j].vector());
      root_gram_(j, i) = root_gram_(i, j);
      EdgeLabel label = edge_label(lattice, roots_[i], roots_[j]);
      edges_[i][j] = label;
      edges_[j][i] = label;
    }
  }
}

const EdgeLabel& CoxeterScheme::edge(std::size_t i, std::size_t j) const {
  return edges_.at(i).at(j);
}

std::vector<std::vector<std::size_t>> CoxeterScheme::components(
    const std::vector<std::size_t>& subset) const {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(subset[cur]);
      for (std::size_t t = 0; t < subset.size(); ++t) {
        if (seen[t]) continue;
        if (edges_[subset[cur]][subset[t]].kind != EdgeKind::None) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool CoxeterScheme::connected() const {
  std::vector<std::size_t> all(size());
  std::iota(all.begin(), all.end(), 0);
  return size() == 0 || components(all).size() == 1;
}

CoxeterScheme build_scheme(const QuadraticLattice& lattice, const std::vector<Root>& roots) {
  return CoxeterScheme(lattice, roots);
}

std::string to_string(SubschemeClass c) {
  switch (c) {
    case SubschemeClass::Elliptic:
      return "elliptic";
    case SubschemeClass::Parabolic:
      return "parabolic";
    case SubschemeClass::Other:
      return "other";
  }
  return "?";
}

SubschemeClass classify_connected_diagram(
    std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, int>>& edges) {
  std::size_t edge_count = 0;
  std::size_t infinity_edges = 0;
  std::vector<std::size_t> degree(n, 0);
  // local adjacency with labels; 0 encodes the bold (infinity) edge
  std::vector<std::vector<int>> lbl(n, std::vector<int>(n, 2));
  for (const auto& [i, j, m] : edges) {
    if (m == -1) return SubschemeClass::Other;  // dotted
    if (m == 2) continue;
    ++edge_count;
    ++degree[i];
    ++degree[j];
    if (m == 0) ++infinity_edges;
    lbl[i][j] = lbl[j][i] = m;
  }

  if (infinity_edges > 0)
    return (n == 2 && edge_count == 1) ? SubschemeClass::Parabolic : SubschemeClass::Other;
  if (n == 1) return SubschemeClass::Elliptic;  // A1

  if (edge_count >= n) {
    // connected, one cycle at most is usable: the affine cycle
    if (edge_count > n) return SubschemeClass::Other;
    bool all_deg2 = std::all_of(degree.begin(), degree.end(),
                                [](std::size_t d) { return d == 2; });
    bool all_simple = true;
    for (std::size_t i = 0; i < n && all_simple; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (lbl[i][j] != 2 && lbl[i][j] != 3) all_simple = false;
    return (all_deg2 && all_simple && n >= 3) ? SubschemeClass::Parabolic
                                              : SubschemeClass::Other;
  }

  // tree
  std::size_t maxdeg = *std::max_element(degree.begin(), degree.end());
  auto neighbors = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n; ++u)
      if (u != v && lbl[v][u] != 2) out.push_back(u);
    return out;
  };

  if (maxdeg >= 4) {
    // affine D4: one degree-4 node, four simple leaves
    if (maxdeg == 4 && n == 5) {
      std::size_t center = std::max_element(degree.begin(), degree.end()) - degree.begin();
      bool ok = true;
      for (std::size_t u : neighbors(center))
        if (degree[u] != 1 || lbl[center][u] != 3) ok = false;
      if (ok) return SubschemeClass::Parabolic;
    }
    return SubschemeClass::Other;
  }

  if (maxdeg == 3) {
    std::vector<std::size_t> branches;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 3) branches.push_back(v);

    // walk from `start` away from `prev`, returning (edge labels, length)
    auto walk_arm = [&](std::size_t branch, std::size_t first) {
      std::vector<int> labels;
      std::size_t prev = branch, cur = first;
      labels.push_back(lbl[branch][first]);
      while (degree[cur] == 2) {
        auto nb = neighbors(cur);
        std::size_t next = (nb[0] == prev) ? nb[1] : nb[0];
        labels.push_back(lbl[cur][next]);
        prev = cur;
        cur = next;
      }
      // arm must end in a leaf; another branch node means the D-affine shape
      return std::pair<std::vector<int>, bool>(labels, degree[cur] == 1);
    };

    if (branches.size() == 1) {
      std::size_t b = branches[0];
      std::vector<std::vector<int>> arms;
      for (std::size_t u : neighbors(b)) {
        auto [labels, leaf_end] = walk_arm(b, u);
        if (!leaf_end) return SubschemeClass::Other;  // unreachable: 1 branch
        arms.push_back(labels);
      }
      std::sort(arms.begin(), arms.end(),
                [](const auto& x, const auto& y) { return x.size() < y.size(); });
      auto all3 = [](const std::vector<int>& a) {
        return std::all_of(a.begin(), a.end(), [](int l) { return l == 3; });
      };
      std::size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
      if (all3(arms[0]) && all3(arms[1]) && all3(arms[2])) {
        if (l0 == 1 && l1 == 1) return SubschemeClass::Elliptic;               // Dn
        if (l0 == 1 && l1 == 2 && (l2 == 2 || l2 == 3 || l2 == 4))
          return SubschemeClass::Elliptic;                                     // E6, E7, E8
        if (l0 == 2 && l1 == 2 && l2 == 2) return SubschemeClass::Parabolic;   // affine E6
        if (l0 == 1 && l1 == 3 && l2 == 3) return SubschemeClass::Parabolic;   // affine E7
        if (l0 == 1 && l1 == 2 && l2 == 5) return SubschemeClass::Parabolic;   // affine E8
        return SubschemeClass::Other;
      }
      // affine Bn: two simple length-1 arms, long arm simple except a
      // terminal 4
      std::vector<const std::vector<int>*> specials;
      std::size_t short_simple = 0;
      for (const auto& arm : arms) {
        if (arm.size() == 1 && arm[0] == 3)
          ++short_simple;
        else
          specials.push_back(&arm);
      }
      if (short_simple == 2 && specials.size() == 1) {
        const std::vector<int>& arm = *specials[0];
        bool good = arm.back() == 4;
        for (std::size_t i = 0; i + 1 < arm.size(); ++i)
          if (arm[i] != 3) good = false;
        if (good) return SubschemeClass::Parabolic;
      }
      return SubschemeClass::Other;
    }

    if (branches.size() == 2) {
      // affine Dn: two forks with simple length-1 prongs joined by a simple path
      for (std::size_t b : branches) {
        std::size_t leaf_arms = 0;
        for (std::size_t u : neighbors(b))
          if (degree[u] == 1 && lbl[b][u] == 3) ++leaf_arms;
        if (leaf_arms != 2) return SubschemeClass::Other;
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (lbl[i][j] != 2 && lbl[i][j] != 3) return SubschemeClass::Other;
      return SubschemeClass::Parabolic;
    }
    return SubschemeClass::Other;
  }

  // path: read labels end to end
  std::size_t start = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) {
      start = v;
      break;
    }
  std::vector<int> labels;
  std::size_t prev = n, cur = start;
  while (true) {
    auto nb = neighbors(cur);
    std::size_t next = n;
    for (std::size_t u : nb)
      if (u != prev) next = u;
    if (next == n) break;
    labels.push_back(lbl[cur][next]);
    prev = cur;
    cur = next;
  }
  std::size_t fours = std::count(labels.begin(), labels.end(), 4);
  std::size_t sixes = std::count(labels.begin(), labels.end(), 6);
  std::size_t threes = std::count(labels.begin(), labels.end(), 3);
  if (threes == labels.size()) return SubschemeClass::Elliptic;  // An
  if (fours == 1 && sixes == 0 && threes == labels.size() - 1) {
    if (labels.front() == 4 || labels.back() == 4) return SubschemeClass::Elliptic;  // Bn
    if (n == 4) return SubschemeClass::Elliptic;                                     // F4
    if (n == 5 && (labels[1] == 4 || labels[2] == 4)) return SubschemeClass::Parabolic;  // affine F4
    return SubschemeClass::Other;
  }
  if (fours == 2 && sixes == 0 && threes == labels.size() - 2) {
    if (labels.front() == 4 && labels.back() == 4) return SubschemeClass::Parabolic;  // affine Cn
    return SubschemeClass::Other;
  }
  if (sixes == 1 && fours == 0) {
    if (n == 2) return SubschemeClass::Elliptic;                  // G2
    if (n == 3 && threes == 1) return SubschemeClass::Parabolic;  // affine G2
    return SubschemeClass::Other;
  }
  return SubschemeClass::Other;
}

namespace {

// one connected component of a scheme against the diagram tables
SubschemeClass classify_component(const CoxeterScheme& scheme,
                                  const std::vector<std::size_t>& comp) {
  std::size_t n = comp.size();
  std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const EdgeLabel& e = scheme.edge(comp[i], comp[j]);
      switch (e.kind) {
        case EdgeKind::None:
          break;
        case EdgeKind::Simple:
        case EdgeKind::Labeled:
          edges.emplace_back(i, j, e.m);
          break;
        case EdgeKind::Bold:
          edges.emplace_back(i, j, 0);
          break;
        case EdgeKind::Dotted:
          edges.emplace_back(i, j, -1);
          break;
      }
    }
  return classify_connected_diagram(n, edges);
}

}  // namespace

SubschemeClass classify_subscheme(const CoxeterScheme& scheme,
                                  const std::vector<std::size_t>& subset) {
  if (subset.empty()) return SubschemeClass::Elliptic;  // empty = rank 0
  bool all_elliptic = true, all_parabolic = true;
  for (const auto& comp : scheme.components(subset)) {
    SubschemeClass c = classify_component(scheme, comp);
    if (c != SubschemeClass::Elliptic) all_elliptic = false;
    if (c != SubschemeClass::Parabolic) all_parabolic = false;
  }
  if (all_elliptic) return SubschemeClass::Elliptic;
  if (all_parabolic) return SubschemeClass::Parabolic;
  return SubschemeClass::Other;
}

namespace {

// ascending subsets of {0..n-1} of the given size, calling f on each;
// returns false if the budget ran out
bool for_each_subset(std::size_t n, std::size_t size, std::size_t& budget,
                     const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (size > n) return true;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (budget == 0) return false;
    --budget;
    f(idx);
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - size) break;
      if (i == 0) return true;
    }
    if (idx[i] == i + n - size) return true;
    ++idx[i];
    for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

FiniteVolumeResult finite_volume_check(const CoxeterScheme& scheme, std::size_t budget) {
  std::size_t d = scheme.hyperbolic_dim();
  if (d < 2) throw DimensionTooSmallError("finite_volume_check: need hyperbolic dimension >= 2");
  std::size_t n = scheme.size();
  FiniteVolumeResult result;

  // ordinary vertices: elliptic subschemes of rank d (= d roots)
  bool ok = for_each_subset(n, d, budget, [&](const std::vector<std::size_t>& subset) {
    if (classify_subscheme(scheme, subset) == SubschemeClass::Elliptic)
      result.vertices.push_back(subset);
  });
  if (!ok) throw BudgetExceededError("finite_volume_check: subscheme budget exceeded");

  // ideal vertices: all components parabolic, total rank d-1
  for (std::size_t size = d; size <= 2 * (d - 1) && size <= n; ++size) {
    ok = for_each_subset(n, size, budget, [&](const std::vector<std::size_t>& subset) {
      auto comps = scheme.components(subset);
      if (subset.size() - comps.size() != d - 1) return;
      for (const auto& comp : comps)
        if (classify_component(scheme, comp) != SubschemeClass::Parabolic) return;
      result.ideal_vertices.push_back(subset);
    });
    if (!ok) throw BudgetExceededError("finite_volume_check: subscheme budget exceeded");
  }

  if (result.vertices.empty() && result.ideal_vertices.empty()) {
    result.finite = false;
    return result;
  }

  // every rank d-1 elliptic subscheme must sit inside exactly two vertices
  bool finite = true;
  ok = for_each_subset(n, d - 1, budget, [&](const std::vector<std::size_t>& subset) {
    if (!finite) return;
    if (classify_subscheme(scheme, subset) != SubschemeClass::Elliptic) return;
    std::size_t extensions = 0;
    auto contains = [&](const std::vector<std::size_t>& super) {
      return std::includes(super.begin(), super.end(), subset.begin(), subset.end());
    };
    for (const auto& v : result.vertices)
      if (contains(v)) ++extensions;
    for (const auto& v : result.ideal_vertices)
      if (contains(v)) ++extensions;
    if (extensions != 2) {
      finite = false;
      result.missing = subset;
    }
  });
  if (!ok) throw BudgetExceededError("finite_volume_check: subscheme budget exceeded");

  result.finite = finite;
  if (finite) {
    result.missing.reset();
  } else {
    result.vertices.clear();
    result.ideal_vertices.clear();
  }
  return result;
}

ThinCertificate thin_certificate(const QuadraticLattice& lattice,
                                 const std::vector<Root>& roots) {
  CoxeterScheme scheme = build_scheme(lattice, roots);
  ThinCertificate cert;
  cert.m = roots.size();
  cert.connected = scheme.connected();
  std::vector<std::size_t> all(roots.size());
  std::iota(all.begin(), all.end(), 0);
  cert.classification = classify_subscheme(scheme, all);
  cert.finite_volume = finite_volume_check(scheme).finite;
  cert.gram_signature = signature(scheme.root_gram());

  std::size_t d = scheme.hyperbolic_dim();
  Signature expected;
  expected.positive = d;
  expected.negative = 1;
  expected.zero = roots.size() >= d + 1 ? roots.size() - d - 1 : 0;

  if (!cert.connected)
    cert.reason = "disconnected";
  else if (cert.classification == SubschemeClass::Elliptic)
    cert.reason = "elliptic";
  else if (cert.classification == SubschemeClass::Parabolic)
    cert.reason = "affine";
  else if (cert.finite_volume)
    cert.reason = "finite volume";
  else if (!(cert.gram_signature == expected) || roots.size() < d + 1)
    cert.reason = "signature";
  else
    cert.thin = true;
  return cert;
}

}  // namespace vinberg
