#include "visicube/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "visicube/errors.hpp"

namespace visicube::oracle {

PatternTable pattern_table(int n, int r, int s, int t) {
  if (t < 1 || r < t || s < t || r > n || n < 1)
    throw std::invalid_argument("pattern_table: bad daisy parameters");
  PatternTable table;
  table.layer = layer_members(n, r);
  if (table.layer.size() > 64)
    throw ScaleCapExceeded("hitting oracle: layer size " +
                           std::to_string(table.layer.size()) + " exceeds 64");
  auto index_of = [&](Vertex v) {
    return static_cast<std::uint64_t>(
        std::lower_bound(table.layer.begin(), table.layer.end(), v) -
        table.layer.begin());
  };
  if (r + s - t > n) return table;  // no pattern fits, nothing to hit
  const Vertex all = (Vertex{1} << n) - 1;
  for (Vertex stem : layer_members(n, r - t)) {
    for (Vertex grow : submasks_of_size(all & ~stem, s)) {
      std::uint64_t mask = 0;
      for (Vertex add : submasks_of_size(grow, t))
        mask |= std::uint64_t{1} << index_of(stem | add);
      table.expansions.push_back(mask);
    }
  }
  return table;
}

namespace {

// Does some hitting set of exactly `limit` elements meet every
// expansion?  Branches on the members of the first unmet expansion.
bool hits_within(const std::vector<std::uint64_t>& expansions, std::uint64_t chosen,
                 int limit) {
  std::uint64_t unmet = 0;
  bool found = false;
  for (std::uint64_t e : expansions)
    if ((e & chosen) == 0) {
      unmet = e;
      found = true;
      break;
    }
  if (!found) return true;
  if (limit == 0) return false;
  for (std::uint64_t rest = unmet; rest != 0; rest &= rest - 1) {
    const std::uint64_t b = rest & (0 - rest);
    if (hits_within(expansions, chosen | b, limit - 1)) return true;
  }
  return false;
}

}  // namespace

bool visible_by_permutations(Vertex u, Vertex v, const VertexSet& m) {
  Hypercube cube(m.dimension());
  cube.require_valid(u);
  cube.require_valid(v);
  const int k = dist(u, v);
  if (k <= 1) return true;
  if (k > 8)
    throw ScaleCapExceeded("visible_by_permutations: dist " + std::to_string(k) +
                           " means " + std::to_string(k) + "! walks, cap is 8");
  std::vector<int> order = elements_of(u ^ v);
  std::sort(order.begin(), order.end());
  do {
    Vertex cur = u;
    bool clean = true;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      cur ^= bit(order[i]);
      if (m.contains(cur)) {
        clean = false;
        break;
      }
    }
    if (clean) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::optional<PairWitness> mv_violation_by_permutations(const VertexSet& m) {
  const auto& mem = m.members();
  for (std::size_t i = 0; i + 1 < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!visible_by_permutations(mem[i], mem[j], m))
        return PairWitness{mem[i], mem[j]};
  return std::nullopt;
}

bool total_mv_by_permutations(const VertexSet& m) {
  const int n = m.dimension();
  if (n > 6)
    throw ScaleCapExceeded("total_mv_by_permutations: cap is n = 6, got " +
                           std::to_string(n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u + 1 < count; ++u)
    for (std::uint64_t v = u + 1; v < count; ++v)
      if (!visible_by_permutations(static_cast<Vertex>(u), static_cast<Vertex>(v), m))
        return false;
  return true;
}

std::uint64_t max_mv_exhaustive(int n) {
  if (n < 1 || n > 3)
    throw ScaleCapExceeded("max_mv_exhaustive: 2^(2^n) subsets, cap is n = 3");
  const std::uint64_t vertices = std::uint64_t{1} << n;
  const std::uint64_t subsets = std::uint64_t{1} << vertices;
  std::uint64_t best = 0;
  for (std::uint64_t pick = 0; pick < subsets; ++pick) {
    const std::uint64_t size = static_cast<std::uint64_t>(std::popcount(pick));
    if (size <= best) continue;
    std::vector<Vertex> members;
    for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1)
      members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    VertexSet m(n, std::move(members));
    if (!mv_violation_by_permutations(m)) best = size;
  }
  return best;
}

std::uint64_t min_daisy_hitting_number(int n, int r, int s, int t) {
  const PatternTable table = pattern_table(n, r, s, t);
  for (int limit = 0;; ++limit)
    if (hits_within(table.expansions, 0, limit))
      return static_cast<std::uint64_t>(limit);
}

std::uint64_t turan_by_hitting_oracle(int n, int r, int s, int t) {
  const std::uint64_t layer_size = pattern_table(n, r, s, t).layer.size();
  return layer_size - min_daisy_hitting_number(n, r, s, t);
}

bool removal_search_confirms(int n, int r, int s, int t, std::uint64_t k) {
  const PatternTable table = pattern_table(n, r, s, t);
  const std::uint64_t layer_size = table.layer.size();
  auto count_subsets = [&](std::uint64_t size) {
    return binomial(static_cast<int>(layer_size), static_cast<int>(size));
  };
  if (k > layer_size) return false;
  if (count_subsets(k) > 1'000'000 || (k > 0 && count_subsets(k - 1) > 1'000'000))
    throw ScaleCapExceeded("removal_search_confirms: too many removal sets to sweep");
  auto hits_all = [&](std::uint64_t removal) {
    for (std::uint64_t e : table.expansions)
      if ((e & removal) == 0) return false;
    return true;
  };
  auto some_removal_works = [&](std::uint64_t size) {
    if (size == 0) return hits_all(0);
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << layer_size;
    while (mask < limit) {
      if (hits_all(mask)) return true;
      mask = next_same_weight(mask);
    }
    return false;
  };
  const bool k_works = some_removal_works(k);
  const bool smaller_fails = (k == 0) || !some_removal_works(k - 1);
  return k_works && smaller_fails;
}

}  // namespace visicube::oracle
