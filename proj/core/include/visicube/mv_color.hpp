#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "visicube/rational.hpp"
#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"
#include "visicube/visibility.hpp"

namespace visicube {

// Total assignment of a color id to every vertex of Q_n, with a palette
// of 2d ids.  Id 2*residue + (part-1) stands for the pair
// (residue, part), residue in [0, d), part in {1, 2}.  The layered
// discipline (residue == weight mod d, boundary layers part 1 only) is
// an invariant of colorings produced by layered_coloring, not of the
// type itself: witnesses of broken colorings must be representable too.
class Coloring {
public:
  Coloring(int n, int d);  // everything gets id 0

  int dimension() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int color_count() const noexcept { return 2 * d_; }

  static int encode(int residue, int part) { return 2 * residue + (part - 1); }

  int id_of(Vertex v) const;
  int residue_of(Vertex v) const { return id_of(v) / 2; }
  int part_of(Vertex v) const { return id_of(v) % 2 + 1; }
  void assign(Vertex v, int residue, int part);
  void assign_id(Vertex v, int id);

  // All 2d classes in id order, empty ones included.
  std::vector<VertexSet> classes() const;
  VertexSet class_members(int id) const;

  // The layered discipline: residue matches weight mod d everywhere and
  // layers r <= d-1 or r >= n-d+1 use part 1 only.  Throws
  // std::invalid_argument naming the first offending vertex.
  void require_layer_structure() const;

  bool operator==(const Coloring&) const = default;

private:
  int n_;
  int d_;
  std::vector<std::uint8_t> ids_;
};

// Random layered coloring: middle layers flip a fair coin between parts
// 1 and 2 per vertex (ascending vertex order, one bit each, so the
// result is a pure function of the seed); boundary layers take part 1.
// Requires n >= 2d >= 6.
Coloring layered_coloring(int n, int d, std::uint64_t seed);

struct RepairOutcome {
  Coloring coloring;
  std::uint64_t rounds = 0;  // resampling steps performed
  bool converged = true;     // false iff max_rounds ran out first
};

// Resampling repair: while some middle layer holds a pattern whose
// C(2d, d) expansion members share one color id, take the first such
// pattern (layers ascending, ids ascending, stems/crowns ascending) and
// re-flip every member's coin, counting one round.  Stops flagged when
// max_rounds is hit with violations still present.  Input must satisfy
// the layered discipline.
RepairOutcome moser_tardos_repair(const Coloring& c, std::uint64_t max_rounds,
                                  std::uint64_t seed);

// First monochromatic middle-layer pattern of c, or nullopt when the
// repair loop would accept c as-is.  Exposed so tests can watch the
// repair invariant directly.
struct MonochromaticDaisy {
  int layer = 0;
  int color_id = 0;
  Vertex stem = 0;
  Vertex crown = 0;
};
std::optional<MonochromaticDaisy> first_monochromatic_daisy(const Coloring& c);

struct ColoringViolation {
  int color_id = 0;
  PairWitness pair;
};

// Exhaustively checks that every color class is a mutual-visibility
// set; first failure wins (ids ascending, pair scan as mv_violation).
// Refuses n above the cap.
inline constexpr int kColoringCheckDimensionCap = 9;
std::optional<ColoringViolation> coloring_violation(const Coloring& c, int threads = 1);

inline bool verify_coloring(const Coloring& c, int threads = 1) {
  return !coloring_violation(c, threads).has_value();
}

// Feasibility arithmetic for the random-coloring guarantee at one
// middle layer: p = 2^(1 - C(2d,d)) is the chance one pattern ends up
// monochromatic in a fixed part, g_bound = C(2d,d) C(r,d) C(n-r,d)
// bounds the number of patterns sharing a member with a fixed one, and
// the guarantee needs e * p * (g_bound + 1) < 1.  e is replaced by the
// slightly larger rational 2.7182818285 so the comparison stays exact.
struct LLLReport {
  int n = 0;
  int d = 0;
  int r = 0;
  Rational p;
  BigInt g_bound;
  Rational criterion;
  bool satisfied = false;
};

LLLReport lll_feasibility(int n, int d, int r);

// Certificate that one color class blocks a pair: if three layers
// i < j < k of the subcube {S : fixed <= S <= fixed | free} are each
// entirely one class, the bottom of layer i and the bottom of layer k
// form a nested pair whose every shortest path crosses the
// all-one-class layer j.  Returns the least such triple (smallest
// color id, then smallest layers) after confirming with is_visible, or
// nullopt.  fixed and free must be disjoint.
struct BlockingTriple {
  Vertex a = 0;
  Vertex b = 0;
  int middle_layer = 0;  // subcube layer index j
  int color_id = 0;
};

std::optional<BlockingTriple> blocking_triple_witness(const Coloring& c, Vertex fixed,
                                                      Vertex free);

}  // namespace visicube
