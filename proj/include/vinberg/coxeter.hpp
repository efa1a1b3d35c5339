#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

enum class EdgeKind {
  None,     // m = 2, orthogonal mirrors
  Simple,   // m = 3
  Labeled,  // m = 4 or 6
  Bold,     // parallel mirrors (meeting at infinity)
  Dotted,   // divergent mirrors, weight attached
};

// Dihedral data of a mirror pair, kept exact as (inner^2, norm product).
struct EdgeLabel {
  EdgeKind kind = EdgeKind::None;
  int m = 2;           // for None/Simple/Labeled
  Int inner_sq;        // inner(e_i, e_j)^2
  Int norm_product;    // (e_i,e_i)(e_j,e_j)

  // dotted weight is |g| with g^2 = inner_sq / norm_product
  Rat weight_squared() const {
    Rat w(inner_sq, norm_product);
    w.canonicalize();
    return w;
  }
};

// inner(e_i, e_j) must be <= 0. Rational dihedral angles pi/m only arise for
// m in {2,3,4,6}; anything else below the parallel threshold is rejected.
EdgeLabel edge_label(const QuadraticLattice& lattice, const Root& a, const Root& b);

enum class SubschemeClass { Elliptic, Parabolic, Other };

std::string to_string(SubschemeClass c);

// One connected diagram given purely by labels: m in {3,4,6}, 0 for an
// infinity edge, -1 for a dotted edge. Matched against the finite and affine
// tables; anything else is Other.
SubschemeClass classify_connected_diagram(
    std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, int>>& edges);

class CoxeterScheme {
 public:
  CoxeterScheme(const QuadraticLattice& lattice, std::vector<Root> roots);

  std::size_t size() const { return roots_.size(); }
  std::size_t hyperbolic_dim() const { return d_; }
  const std::vector<Root>& roots() const { return roots_; }
  const IntMat& root_gram() const { return root_gram_; }
  const EdgeLabel& edge(std::size_t i, std::size_t j) const;

  bool connected() const;
  std::vector<std::vector<std::size_t>> components(const std::vector<std::size_t>& subset) const;

 private:
  std::vector<Root> roots_;
  std::size_t d_;
  IntMat root_gram_;
  std::vector<std::vector<EdgeLabel>> edges_;
};

CoxeterScheme build_scheme(const QuadraticLattice& lattice, const std::vector<Root>& roots);

// Combinatorial lookup against the finite and affine diagram tables with
// labels restricted to {2,3,4,6,infinity}; dotted edges force Other.
SubschemeClass classify_subscheme(const CoxeterScheme& scheme,
                                  const std::vector<std::size_t>& subset);

struct FiniteVolumeResult {
  bool finite = false;
  // vertex subschemes (ordinary and ideal) when finite
  std::vector<std::vector<std::size_t>> vertices;
  std::vector<std::vector<std::size_t>> ideal_vertices;
  // a rank d-1 elliptic subscheme with vertex count != 2, when infinite
  std::optional<std::vector<std::size_t>> missing;
};

// Finite volume iff some vertex (ordinary or ideal) exists and every elliptic
// subscheme of rank d-1 lies in exactly two vertex subschemes.
// `budget` caps the number of subsets examined.
FiniteVolumeResult finite_volume_check(const CoxeterScheme& scheme,
                                       std::size_t budget = std::size_t(1) << 24);

struct ThinCertificate {
  std::size_t m = 0;
  bool connected = false;
  SubschemeClass classification = SubschemeClass::Other;
  bool finite_volume = false;
  Signature gram_signature;
  bool thin = false;
  std::string reason;  // empty when thin
};

ThinCertificate thin_certificate(const QuadraticLattice& lattice,
                                 const std::vector<Root>& roots);

}  // namespace vinberg
