#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "visicube/rational.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"

namespace visicube {

// Forbidden configuration inside one layer: a stem/crown pair A <= B
// with |A| = r - t and |B| = r + s - t.  Its expansion is every weight-r
// set between them, C(s, t) sets in total; a family "contains" the
// pattern when it holds the whole expansion.
struct DaisyPattern {
  int n = 1;
  int r = 0;
  int s = 0;
  int t = 0;
  Vertex stem = 0;   // the common core A
  Vertex crown = 0;  // the envelope B

  // Checks stem <= crown, both cardinalities, min(r, s) >= t >= 1, and
  // that crown fits in Q_n.  Throws std::invalid_argument.
  void validate() const;

  // The C(s, t) expansion members, increasing numeric order.
  std::vector<Vertex> expansion() const;
};

// A set of weight-r vertices in Q_n: search state and construction
// output both travel in this shape.
struct LayerFamily {
  int n = 1;
  int r = 0;
  VertexSet members;

  static LayerFamily empty(int n, int r);
  static LayerFamily full_layer(int n, int r);

  std::uint64_t size() const noexcept { return members.size(); }
  bool contains(Vertex v) const noexcept { return members.contains(v); }

  // Dimension agreement plus the every-member-has-weight-r invariant;
  // throws InvalidFamily.
  void validate() const;
};

// Scan for a pattern whose expansion lies inside f, stems ascending and
// crowns ascending within each stem, so a hit is the numerically least
// pattern.  nullopt == f is pattern-free.  A pattern that cannot fit
// (r + s - t > n) yields nullopt rather than an error because callers
// lean on the vacuous case.
std::optional<DaisyPattern> find_daisy(const LayerFamily& f, int s, int t);

// Same scan restricted to patterns through v: expansion inside
// f union {v} and containing v.  This is the incremental probe used
// when growing a family vertex by vertex; if f was pattern-free, the
// grown family is pattern-free iff this returns nullopt.
std::optional<DaisyPattern> find_daisy_through(const LayerFamily& f, Vertex v,
                                               int s, int t);

// Maximal pattern-free family found greedily.  Default order is colex;
// passing a seed shuffles the candidate order reproducibly instead.
LayerFamily greedy_daisy_free(int n, int r, int s, int t,
                              std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Exact extremal number together with one extremal family.
struct TuranRecord {
  int n = 1;
  int r = 0;
  int s = 0;
  int t = 0;
  std::uint64_t value = 0;
  LayerFamily extremal_family;
  bool optimal = true;  // false iff the search budget ran out first
  std::uint64_t nodes_explored = 0;

  // value / C(n, r), exact.
  Rational density() const;
};

inline constexpr std::chrono::milliseconds kDefaultTuranBudget{10'000};

// Branch and bound over the layer in colex order, include branch first,
// seeded with the greedy family; value >= greedy size holds with or
// without budget exhaustion (exhaustion flags optimal = false).  Throws
// std::invalid_argument on parameter nonsense.
TuranRecord turan_exact(int n, int r, int s, int t,
                        std::chrono::milliseconds budget = kDefaultTuranBudget);

// Check a chain of exact records against the two density monotonicity
// inequalities: along n at fixed (r, s, t), density may not increase,
// and likewise along the diagonal (n, r) -> (n+1, r+1) at fixed (s, t).
// The chain shape is inferred from the first two records and enforced on
// the rest (std::invalid_argument otherwise).  Returns the indices of
// the first adjacent pair that violates, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> density_monotonicity_violation(
    std::span<const TuranRecord> records);

inline bool densities_monotone(std::span<const TuranRecord> records) {
  return !density_monotonicity_violation(records).has_value();
}

}  // namespace visicube
