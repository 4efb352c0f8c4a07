#pragma once

#include <optional>
#include <vector>

#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"

namespace visicube {

// Distances above this cap make the subset-lattice sweep refuse to run
// (2^dist states) instead of silently eating memory.
inline constexpr int kVisibilityDistanceCap = 28;

// u sees v with respect to the obstacle set m: some shortest u-v path is
// internally disjoint from m.  Membership of u or v in m itself is
// irrelevant, and a vertex always sees itself.  Cost 2^dist(u,v) via a
// reachability sweep over the subset lattice of u^v; throws
// ScaleCapExceeded past kVisibilityDistanceCap and DimensionMismatch
// when u or v leaves m's cube.
bool is_visible(Vertex u, Vertex v, const VertexSet& m);

struct PairWitness {
  Vertex u = 0;
  Vertex v = 0;
  bool operator==(const PairWitness&) const = default;
};

// First pair (u, v) with u < v numerically, scanning u ascending and v
// ascending within each u, such that is_visible(u, v, m) fails; nullopt
// when m is a mutual-visibility set.  threads > 1 splits the scan over
// disjoint pair blocks; the reported pair does not depend on the thread
// count.
std::optional<PairWitness> mv_violation(const VertexSet& m, int threads = 1);

inline bool is_mv_set(const VertexSet& m, int threads = 1) {
  return !mv_violation(m, threads).has_value();
}

// First invisible pair over *all* of Q_n against obstacle set m, same
// scan order as mv_violation; nullopt means m is a total
// mutual-visibility set.  Checks all C(2^n, 2) pairs, so dimensions
// above `dimension_cap` are refused with ScaleCapExceeded.
inline constexpr int kTotalCheckDimensionCap = 9;

std::optional<PairWitness> total_mv_violation(const VertexSet& m,
                                              int threads = 1,
                                              int dimension_cap = kTotalCheckDimensionCap);

inline bool is_total_mv_set(const VertexSet& m, int threads = 1,
                            int dimension_cap = kTotalCheckDimensionCap) {
  return !total_mv_violation(m, threads, dimension_cap).has_value();
}

// All weight-r vertices c with (a & b) <= c <= (a | b), increasing
// numeric order.  Empty when no such c exists.
std::vector<Vertex> interval_members(Vertex a, Vertex b, int r);

// True when c lies in the interval spanned by a and b, i.e. every
// coordinate shared by a and b is in c and c adds none outside a | b.
constexpr bool in_interval(Vertex c, Vertex a, Vertex b) noexcept {
  return ((a & b) & ~c) == 0 && (c & ~(a | b)) == 0;
}

}  // namespace visicube
