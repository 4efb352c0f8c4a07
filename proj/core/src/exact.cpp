#include "visicube/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "visicube/errors.hpp"
#include "visicube/mv_build.hpp"
#include "visicube/total_mv.hpp"
#include "visicube/visibility.hpp"

namespace visicube {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// current is a mutual-visibility set; extend it by v if the extension
// stays one.  Inserts v, rechecks pairs involving v and pairs whose
// interval contains v (v cannot block any other pair), and rolls back
// on failure.  On success v stays in.
bool try_add(VertexSet& current, Vertex v) {
  current.insert(v);
  const auto& mem = current.members();
  for (Vertex u : mem) {
    if (u == v) continue;
    if (!is_visible(u, v, current)) {
      current.erase(v);
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
    if (mem[i] == v) continue;
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      if (mem[j] == v) continue;
      if (in_interval(v, mem[i], mem[j]) && !is_visible(mem[i], mem[j], current)) {
        current.erase(v);
        return false;
      }
    }
  }
  return true;
}

// Parity side of the distance-2 graph as bitmask adjacency.
struct ParitySide {
  std::vector<Vertex> verts;
  std::vector<std::uint64_t> adj;
};

ParitySide build_side(int n, int parity) {
  ParitySide side;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v)
    if (weight(static_cast<Vertex>(v)) % 2 == parity)
      side.verts.push_back(static_cast<Vertex>(v));
  side.adj.assign(side.verts.size(), 0);
  for (std::size_t i = 0; i < side.verts.size(); ++i)
    for (std::size_t j = i + 1; j < side.verts.size(); ++j)
      if (dist(side.verts[i], side.verts[j]) == 2) {
        side.adj[i] |= std::uint64_t{1} << j;
        side.adj[j] |= std::uint64_t{1} << i;
      }
  return side;
}

struct MisResult {
  std::uint64_t best_mask = 0;
  int best_count = 0;
  std::uint64_t nodes = 0;
};

void mis_dive(const ParitySide& side, std::uint64_t cand, std::uint64_t cur_mask,
              int cur_count, MisResult& out) {
  ++out.nodes;
  if (cur_count + std::popcount(cand) <= out.best_count) return;
  if (cand == 0) {
    out.best_count = cur_count;
    out.best_mask = cur_mask;
    return;
  }
  // Branch on the busiest candidate; isolated candidates all join.
  int pick = -1;
  int pick_deg = -1;
  for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const int deg = std::popcount(side.adj[static_cast<std::size_t>(i)] & cand);
    if (deg > pick_deg) {
      pick_deg = deg;
      pick = i;
    }
  }
  if (pick_deg == 0) {
    out.best_count = cur_count + std::popcount(cand);
    out.best_mask = cur_mask | cand;
    return;
  }
  const std::uint64_t vbit = std::uint64_t{1} << pick;
  mis_dive(side, cand & ~(side.adj[static_cast<std::size_t>(pick)] | vbit),
           cur_mask | vbit, cur_count + 1, out);
  mis_dive(side, cand & ~vbit, cur_mask, cur_count, out);
}

// Exact chromatic number of one parity side by iterative deepening;
// returns the class masks.  Greedy first-fit supplies the upper bound,
// a greedy clique the lower.
struct SideColoring {
  std::vector<std::uint64_t> class_masks;
  bool optimal = true;
  std::uint64_t nodes = 0;
};

SideColoring color_side(const ParitySide& side, Clock::time_point deadline) {
  const std::size_t count = side.verts.size();
  std::vector<int> greedy(count, -1);
  int greedy_k = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t used = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (side.adj[i] >> j & 1) used |= std::uint64_t{1} << greedy[j];
    const int c = std::countr_one(used);
    greedy[i] = c;
    greedy_k = std::max(greedy_k, c + 1);
  }

  // Greedy clique for the floor: grow from the busiest vertex.
  std::uint64_t clique = 0;
  std::uint64_t common = (count == 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << count) - 1;
  while (common != 0) {
    int pick = -1;
    int pick_deg = -1;
    for (std::uint64_t rest = common; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const int deg = std::popcount(side.adj[static_cast<std::size_t>(i)] & common);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = i;
      }
    }
    clique |= std::uint64_t{1} << pick;
    common &= side.adj[static_cast<std::size_t>(pick)];
  }
  const int lower = std::popcount(clique);

  SideColoring out;
  auto materialize = [&](const std::vector<int>& assignment, int k) {
    out.class_masks.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < count; ++i)
      out.class_masks[static_cast<std::size_t>(assignment[i])] |= std::uint64_t{1} << i;
  };

  for (int k = lower; k < greedy_k; ++k) {
    std::vector<int> assignment(count, -1);
    bool truncated = false;
    auto dive = [&](auto&& self, std::size_t idx, int used) -> bool {
      ++out.nodes;
      if ((out.nodes & 1023) == 0 && Clock::now() > deadline) {
        truncated = true;
        return false;
      }
      if (idx == count) return true;
      std::uint64_t banned = 0;
      for (std::size_t j = 0; j < idx; ++j)
        if (side.adj[idx] >> j & 1) banned |= std::uint64_t{1} << assignment[j];
      const int limit = std::min(used + 1, k);
      for (int c = 0; c < limit; ++c) {
        if (banned >> c & 1) continue;
        assignment[idx] = c;
        if (self(self, idx + 1, std::max(used, c + 1))) return true;
        assignment[idx] = -1;
        if (truncated) return false;
      }
      return false;
    };
    if (dive(dive, 0, 0)) {
      materialize(assignment, k);
      return out;
    }
    if (truncated) {
      out.optimal = false;
      break;
    }
  }
  materialize(greedy, greedy_k);
  return out;
}

}  // namespace

std::string_view parameter_label(TargetParameter p) {
  switch (p) {
    case TargetParameter::largest_mv: return "mu";
    case TargetParameter::largest_total_mv: return "mu-total";
    case TargetParameter::fewest_mv_classes: return "chi-mu";
    case TargetParameter::fewest_total_mv_classes: return "chi-mu-total";
  }
  return "unknown";
}

SolveResult max_mv(int n, std::chrono::milliseconds budget, bool warm_start) {
  if (n < 1) throw std::invalid_argument("max_mv: n must be positive");
  if (n > 20) throw ScaleCapExceeded("max_mv: candidate sweep over 2^n needs n <= 20");
  const auto start = Clock::now();
  const auto deadline = start + budget;

  SolveResult res;
  res.parameter = TargetParameter::largest_mv;
  res.n = n;

  VertexSet best(n);
  if (warm_start && n >= 3) {
    for (int r = 0; r + 3 <= n; ++r) {
      VertexSet cand = VertexSet(n, layer_members(n, r))
                           .united_with(VertexSet(n, layer_members(n, r + 3)));
      if (cand.size() > best.size() && is_mv_set(cand)) best = std::move(cand);
    }
    VertexSet layered = best_layered_set(n, 3, greedy_supplier()).as_vertex_set();
    if (layered.size() > best.size() && is_mv_set(layered)) best = std::move(layered);
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  VertexSet current(n);
  bool truncated = false;
  auto dive = [&](auto&& self, std::uint64_t idx) -> void {
    if (truncated) return;
    ++res.nodes_explored;
    if ((res.nodes_explored & 1023) == 0 && Clock::now() > deadline) {
      truncated = true;
      return;
    }
    if (current.size() + (total - idx) <= best.size()) return;
    if (idx == total) {
      best = current;
      return;
    }
    const Vertex v = static_cast<Vertex>(idx);
    if (try_add(current, v)) {
      self(self, idx + 1);
      current.erase(v);
    }
    self(self, idx + 1);
  };
  dive(dive, 0);

  res.value = best.size();
  res.certificate = {std::move(best)};
  res.optimal = !truncated;
  res.elapsed_seconds = seconds_since(start);
  return res;
}

SolveResult max_total_mv(int n) {
  if (n < 1) throw std::invalid_argument("max_total_mv: n must be positive");
  if (n > kTotalSolveDimensionCap)
    throw ScaleCapExceeded("max_total_mv: n = " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kTotalSolveDimensionCap));
  const auto start = Clock::now();
  SolveResult res;
  res.parameter = TargetParameter::largest_total_mv;
  res.n = n;

  std::vector<Vertex> members;
  for (int parity = 0; parity < 2; ++parity) {
    const ParitySide side = build_side(n, parity);
    MisResult mis;
    const std::uint64_t all = (side.verts.size() == 64)
                                  ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << side.verts.size()) - 1;
    mis_dive(side, all, 0, 0, mis);
    res.nodes_explored += mis.nodes;
    for (std::uint64_t rest = mis.best_mask; rest != 0; rest &= rest - 1)
      members.push_back(side.verts[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  VertexSet cert(n, std::move(members));
  if (auto pair = distance2_violation(cert))
    throw InvariantBreach("max_total_mv: solver emitted members " +
                          std::to_string(pair->u) + ", " + std::to_string(pair->v) +
                          " at distance 2");
  res.value = cert.size();
  res.certificate = {std::move(cert)};
  res.elapsed_seconds = seconds_since(start);
  return res;
}

SolveResult chromatic_mv(int n, std::chrono::milliseconds budget) {
  if (n < 1) throw std::invalid_argument("chromatic_mv: n must be positive");
  if (n > 10)
    throw ScaleCapExceeded("chromatic_mv: exhaustive partition search needs n <= 10");
  const auto start = Clock::now();
  const auto deadline = start + budget;
  SolveResult res;
  res.parameter = TargetParameter::fewest_mv_classes;
  res.n = n;

  const std::uint64_t total = std::uint64_t{1} << n;

  std::vector<VertexSet> greedy;
  for (std::uint64_t v = 0; v < total; ++v) {
    bool placed = false;
    for (auto& cls : greedy)
      if (try_add(cls, static_cast<Vertex>(v))) {
        placed = true;
        break;
      }
    if (!placed) {
      greedy.emplace_back(n);
      try_add(greedy.back(), static_cast<Vertex>(v));
    }
  }
  const std::uint64_t upper = greedy.size();

  // Pigeonhole floor needs the exact largest-set value; without it the
  // floor stays at 1 and the deepening does the work.
  std::uint64_t lower = 1;
  const SolveResult mu = max_mv(n, budget / 2);
  res.nodes_explored += mu.nodes_explored;
  if (mu.optimal) lower = ceil_div(total, mu.value);

  for (std::uint64_t k = lower; k < upper; ++k) {
    std::vector<VertexSet> classes(static_cast<std::size_t>(k), VertexSet(n));
    bool truncated = false;
    auto dive = [&](auto&& self, std::uint64_t idx, std::size_t used) -> bool {
      ++res.nodes_explored;
      if ((res.nodes_explored & 1023) == 0 && Clock::now() > deadline) {
        truncated = true;
        return false;
      }
      if (idx == total) return true;
      const Vertex v = static_cast<Vertex>(idx);
      const std::size_t limit = std::min<std::size_t>(used + 1, k);
      for (std::size_t c = 0; c < limit; ++c) {
        if (try_add(classes[c], v)) {
          if (self(self, idx + 1, std::max(used, c + 1))) return true;
          classes[c].erase(v);
          if (truncated) return false;
        }
      }
      return false;
    };
    if (dive(dive, 0, 0)) {
      res.value = k;
      res.certificate = std::move(classes);
      res.optimal = true;
      res.elapsed_seconds = seconds_since(start);
      return res;
    }
    if (truncated) {
      res.value = upper;
      res.certificate = std::move(greedy);
      res.optimal = false;
      res.elapsed_seconds = seconds_since(start);
      return res;
    }
  }
  res.value = upper;
  res.certificate = std::move(greedy);
  res.optimal = true;
  res.elapsed_seconds = seconds_since(start);
  return res;
}

SolveResult chromatic_total_mv(int n, std::chrono::milliseconds budget) {
  if (n < 1) throw std::invalid_argument("chromatic_total_mv: n must be positive");
  if (n > kTotalSolveDimensionCap)
    throw ScaleCapExceeded("chromatic_total_mv: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(kTotalSolveDimensionCap));
  const auto start = Clock::now();
  SolveResult res;
  res.parameter = TargetParameter::fewest_total_mv_classes;
  res.n = n;

  const ParitySide even = build_side(n, 0);
  const SideColoring coloring = color_side(even, start + budget);
  res.nodes_explored = coloring.nodes;
  res.optimal = coloring.optimal;
  res.value = coloring.class_masks.size();

  // Translate each even class onto the odd side: XOR with coordinate 1
  // is a cube isometry swapping the parities, and odd-even pairs are
  // never at distance 2, so the merged classes still avoid distance 2.
  for (std::uint64_t mask : coloring.class_masks) {
    std::vector<Vertex> members;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const Vertex u = even.verts[static_cast<std::size_t>(std::countr_zero(rest))];
      members.push_back(u);
      members.push_back(u ^ bit(1));
    }
    VertexSet cls(n, std::move(members));
    if (auto pair = distance2_violation(cls))
      throw InvariantBreach("chromatic_total_mv: emitted class with members " +
                            std::to_string(pair->u) + ", " + std::to_string(pair->v) +
                            " at distance 2");
    res.certificate.push_back(std::move(cls));
  }
  res.elapsed_seconds = seconds_since(start);
  return res;
}

}  // namespace visicube
