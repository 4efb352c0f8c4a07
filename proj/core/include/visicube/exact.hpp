#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"

namespace visicube {

enum class TargetParameter {
  largest_mv,              // biggest mutual-visibility set
  largest_total_mv,        // biggest set the whole cube can see around
  fewest_mv_classes,       // partition chromatic number, MV classes
  fewest_total_mv_classes  // same with total-MV classes
};

std::string_view parameter_label(TargetParameter p);

struct SolveResult {
  TargetParameter parameter = TargetParameter::largest_mv;
  int n = 1;
  std::uint64_t value = 0;
  // One set for the max problems, the class list for the partition
  // problems.  Always passes the matching verifier, optimal or not.
  std::vector<VertexSet> certificate;
  bool optimal = true;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

inline constexpr std::chrono::milliseconds kDefaultSolveBudget{60'000};

// Branch and bound over vertices in colex order.  Every subset of a
// mutual-visibility set is one, so partial sets are always feasible and
// adding v only needs rechecks of pairs whose interval gained v plus
// pairs involving v.  With warm_start the search opens with the best of
// the layer-pair unions L_r + L_{r+3} and the layered construction, so
// the reported value never falls below those; exhausting the tree
// proves optimality, running out of budget flags optimal = false.
SolveResult max_mv(int n, std::chrono::milliseconds budget = kDefaultSolveBudget,
                   bool warm_start = true);

// Exact by maximum independent set on the distance-2 graph, which has
// no edges between odd and even weights; each parity side (at most 64
// vertices for n <= 7) is solved on bitmask adjacency.  Dimension cap 7.
inline constexpr int kTotalSolveDimensionCap = 7;
SolveResult max_total_mv(int n);

// Iterative deepening on the class count: greedy first-fit gives an
// upper certificate, the exact largest-set value gives the pigeonhole
// floor, and a depth-first assignment with first-open-class symmetry
// breaking settles each count in between.  Budget exhaustion returns
// the greedy certificate flagged non-optimal.
SolveResult chromatic_mv(int n, std::chrono::milliseconds budget = kDefaultSolveBudget);

// Same shape on the distance-2 graph.  Classes may mix weight
// parities freely (odd-even pairs are never at distance 2), so the
// optimum equals the chromatic number of the even side, and an even
// side coloring turns into a full partition by translating each class
// onto the odd side.  Dimension cap 7.
SolveResult chromatic_total_mv(int n,
                               std::chrono::milliseconds budget = kDefaultSolveBudget);

}  // namespace visicube
