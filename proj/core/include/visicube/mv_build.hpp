#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "visicube/daisy.hpp"
#include "visicube/path.hpp"
#include "visicube/rational.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"

namespace visicube {

// Union of layer families over the arithmetic progression of layers
// r == residue (mod d).  Layers near the bottom or top of the cube
// (r <= d-1 or r >= n-d+1) carry the complete layer; every other
// selected layer carries a family free of the (r, 2d, d) daisy pattern.
// Built this way, the union is a mutual-visibility set.
struct LayeredConstruction {
  int n = 3;
  int d = 3;
  int residue = 0;  // in {0, ..., d-1}
  std::map<int, LayerFamily> families;  // keyed by selected layer r

  bool layer_selected(int r) const noexcept {
    return r >= 0 && r <= n && r % d == residue;
  }
  bool boundary_layer(int r) const noexcept { return r <= d - 1 || r >= n - d + 1; }
  int top_selected_layer() const;

  std::uint64_t size() const;
  bool contains(Vertex v) const;
  VertexSet as_vertex_set() const;

  // Full invariant sweep: parameter sanity, one family per selected
  // layer and none elsewhere, complete boundary layers, daisy-free
  // middle layers.  Throws InvalidFamily or std::invalid_argument.
  void validate() const;
};

// Produces the family for one middle layer; the builder passes
// (n, r, 2d, d) and trusts the result only after checking it.
using FamilySupplier = std::function<LayerFamily(int n, int r, int s, int t)>;

FamilySupplier greedy_supplier();
FamilySupplier exact_supplier(std::chrono::milliseconds per_layer_budget = kDefaultTuranBudget);
FamilySupplier empty_supplier();
// Serves prebuilt families (e.g. read from files); missing layer or
// parameter disagreement throws InvalidFamily.
FamilySupplier fixed_supplier(std::map<int, LayerFamily> families);

// Assemble the construction for one residue.  Requires n >= d >= 3 and
// residue in [0, d); a supplier family that fails validation or holds a
// (2d, d) daisy raises InvalidFamily.
LayeredConstruction build_layered_set(int n, int d, int residue,
                                      const FamilySupplier& supplier);

// All d residues built with the same supplier; returns the largest,
// ties to the smaller residue.
LayeredConstruction best_layered_set(int n, int d, const FamilySupplier& supplier);

// Colex-least weight-r vertex outside f within the interval spanned by
// a and b.  Preconditions weight(a) <= r - d and weight(b) >= r + d
// guarantee existence whenever f is (2d, d)-daisy-free: if the whole
// interval sat inside f, a stem extending a & b and a crown inside
// a | b would exhibit a full daisy.  Absence therefore throws
// InvariantBreach, not a user error.
Vertex find_hole(Vertex a, Vertex b, const LayerFamily& f, int d);

// Shortest path between two vertices of L_r union L_{r'}, internal
// vertices strictly between the layers (so disjoint from both).
// Requires r + 3 <= r' and a != b.  Equal-weight pairs zigzag through
// the two layers directly above (below, for pairs sitting in L_{r'});
// split pairs climb with at most one excursion per surplus element.
Path layer_pair_path(Vertex a, Vertex b, int r, int r_prime);

// Shortest a,b-path through c, for c in the interval spanned by a and
// b: flips a^c in ascending coordinate order, then c^b likewise.
Path through_point_path(Vertex a, Vertex b, Vertex c);

// Shortest a,b-path internally disjoint from the whole construction,
// for members a, b.  Splits the layer gap at holes of intermediate
// selected families and stitches layer_pair_path pieces together.
Path witness_path(Vertex a, Vertex b, const LayeredConstruction& k);

// Size bound implied by layer counts: (sum of middle-layer values plus
// twice the count of the d cheapest boundary layers) / d, exact.
struct BoundReport {
  int n = 3;
  int d = 3;
  std::map<int, std::uint64_t> middle_values;  // r -> family size, d <= r <= n-d
  std::uint64_t boundary_doubled = 0;          // 2 * sum_{r=0}^{d-1} C(n, r)
  Rational total;                              // lower bound on the largest MV set
  Rational fraction_of_cube;                   // total / 2^n
};

// Exact evaluation of the averaging bound.  ex_values must cover
// exactly the middle range [d, n-d] (empty when n < 2d); anything
// missing or extraneous is an error.
BoundReport layered_size_bound(int n, int d,
                               const std::map<int, std::uint64_t>& ex_values);

// Rigorous rational lower bound on prod_{k>=1} (1 - q^-k): the first K
// factors exactly, the tail by 1 - sum_{k>K} q^-k = 1 - q^-K/(q-1).
Rational euler_product_lower(unsigned q, unsigned K);

// The advertised asymptotic density constant 14/75 is consistent:
// 0.56 / 3 equals it exactly and the K=20 product bound at q=3 clears
// 0.56.
bool density_constant_check();

}  // namespace visicube
