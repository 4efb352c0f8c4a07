#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

// Reference implementations that share no machinery with the fast
// paths: brute-force path enumeration instead of the lattice sweep,
// hitting-set search instead of branch and bound over families, full
// subset enumeration instead of pruned search.  They exist so results
// can be cross-checked through genuinely different code, and they are
// deliberately slow; every entry point carries a hard scale guard.
namespace visicube::oracle {

// Visibility by trying every one of the dist! coordinate orders.
// Guard: dist(u, v) <= 8 (8! = 40320 walks).
bool visible_by_permutations(Vertex u, Vertex v, const VertexSet& m);

// First invisible pair of m under the permutation check, same scan
// order as mv_violation.
std::optional<PairWitness> mv_violation_by_permutations(const VertexSet& m);

// Is every pair of cube vertices fine with obstacle set m, by the
// permutation check.  Guard: n <= 6.
bool total_mv_by_permutations(const VertexSet& m);

// Largest mutual-visibility set by testing all 2^(2^n) subsets with
// the permutation check.  Guard: n <= 3.
std::uint64_t max_mv_exhaustive(int n);

// All (s, t)-pattern expansions of layer r, each as a bitmask over the
// colex index of the layer (which is why the layer must fit in 64).
struct PatternTable {
  std::vector<Vertex> layer;
  std::vector<std::uint64_t> expansions;
};

PatternTable pattern_table(int n, int r, int s, int t);

// Fewest weight-r sets whose removal leaves the layer free of
// (s, t)-patterns, by iterative-deepening hitting-set search over the
// pattern expansions.  Guard: C(n, r) <= 64.
std::uint64_t min_daisy_hitting_number(int n, int r, int s, int t);

// C(n, r) minus the hitting number: the extremal family size through
// the complementary lens.
std::uint64_t turan_by_hitting_oracle(int n, int r, int s, int t);

// Confirms the hitting number k the long way around: some k-subset of
// the layer intersects every pattern expansion and no (k-1)-subset
// does, by enumerating all subsets of those two sizes.  Guard:
// C(C(n,r), k) <= 10^6.
bool removal_search_confirms(int n, int r, int s, int t, std::uint64_t k);

}  // namespace visicube::oracle
