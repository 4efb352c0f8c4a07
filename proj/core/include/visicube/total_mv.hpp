#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

namespace visicube {

// First pair of m at Hamming distance exactly 2 (scan order: first
// member ascending, second ascending), or nullopt.  In Q_n, avoiding
// distance 2 is equivalent to being a total mutual-visibility set; the
// equivalence against the direct definition is covered by tests, not
// assumed here.
std::optional<PairWitness> distance2_violation(const VertexSet& m);

inline bool avoids_distance2(const VertexSet& m) {
  return !distance2_violation(m).has_value();
}

// The classic single-error-correcting code on n = 2^m - 1 positions:
// words whose set positions XOR to zero (each position hit by its
// binary expansion).  Size 2^n / (n + 1), pairwise distance >= 3,
// radius-1 balls tile the cube.  m must be in [2, 4]; the enumeration
// walks all 2^n words, so larger m is refused (ScaleCapExceeded), and
// m < 2 leaves no code (std::invalid_argument).
VertexSet hamming_code(int m);

// Sum of the 1-indexed set positions, e.g. 011 -> 2 + 3 = 5.
int position_norm(Vertex x);

// One residue class of a weight-w layer: members x with
// position_norm(x) == lambda (mod n).  Distinct members differ in at
// least two positions with distinct position sums, so their Hamming
// distance is at least 4.
struct WeightClass {
  int n = 1;
  int w = 0;
  int residue = 0;  // lambda in [0, n)
  VertexSet members;
};

struct WeightClassList {
  std::vector<WeightClass> classes;  // residue order, all n of them
  std::size_t best_index = 0;        // largest class, ties to smaller residue
};

// All n residue classes of layer w (they partition the layer); the
// best one has at least C(n, w) / n members by pigeonhole.
WeightClassList weight_classes(int n, int w);

// Union of best classes over the weights with w mod 4 in {0, 1}
// (group A) and in {2, 3} (group B).  Within a group, distinct weights
// differ by 1 or by >= 3 and equal weights sit 4 apart, so each group
// avoids distance 2; this is re-checked by direct pair scan before
// returning.  max(|A|, |B|) >= 2^(n-1) / n.
struct TotalMvConstruction {
  int n = 1;
  VertexSet group_a;
  VertexSet group_b;
};

TotalMvConstruction build_ab(int n);

// Partition of V(Q_n) into at most 2n distance-2-avoiding classes,
// one per (residue, group side) pair that is nonempty: vertex x of
// weight w joins (position_norm(x) mod n, side(w mod 4)).
struct PartitionClass {
  int residue = 0;
  char side = 'A';  // 'A' for w mod 4 in {0,1}, 'B' otherwise
  VertexSet members;
};

std::vector<PartitionClass> total_mv_partition(int n);

// Verifies the degree counts behind the |m| <= 2^n / n bound on the
// distance-2 graph between m and its complement: every member has all
// C(n, 2) of its distance-2 neighbors outside m, and every non-member
// has at most floor(n / 2) distance-2 neighbors inside m.  Input must
// itself avoid distance 2 (std::invalid_argument otherwise); the full
// cube sweep refuses n above the cap.
inline constexpr int kCountingCheckDimensionCap = 16;
bool counting_upper_check(const VertexSet& m);

}  // namespace visicube
