#include "visicube/daisy.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "visicube/errors.hpp"

namespace visicube {
namespace {

void validate_params(int n, int r, int s, int t) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("daisy parameters: n must be in [1, 62]");
  if (r < 0 || r > n) throw std::invalid_argument("daisy parameters: r out of [0, n]");
  if (t < 1) throw std::invalid_argument("daisy parameters: t must be positive");
  if (r < t || s < t)
    throw std::invalid_argument("daisy parameters: need min(r, s) >= t");
}

}  // namespace

void DaisyPattern::validate() const {
  validate_params(n, r, s, t);
  Hypercube(n).require_valid(crown);
  if ((stem & ~crown) != 0)
    throw std::invalid_argument("daisy pattern: stem must be a subset of crown");
  if (weight(stem) != r - t)
    throw std::invalid_argument("daisy pattern: |stem| must be r - t");
  if (weight(crown) != r + s - t)
    throw std::invalid_argument("daisy pattern: |crown| must be r + s - t");
}

std::vector<Vertex> DaisyPattern::expansion() const {
  validate();
  std::vector<Vertex> out;
  out.reserve(binomial(s, t));
  // Free part of the crown has exactly s elements; each t-subset of it
  // tops up the stem to weight r.  Ascending submasks OR-ed onto the
  // disjoint stem stay ascending.
  for (Vertex add : submasks_of_size(crown & ~stem, t)) out.push_back(stem | add);
  return out;
}

LayerFamily LayerFamily::empty(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("LayerFamily: r out of [0, n]");
  return LayerFamily{n, r, VertexSet(n)};
}

LayerFamily LayerFamily::full_layer(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("LayerFamily: r out of [0, n]");
  return LayerFamily{n, r, VertexSet(n, layer_members(n, r))};
}

void LayerFamily::validate() const {
  if (r < 0 || r > n)
    throw InvalidFamily("layer family: r = " + std::to_string(r) + " out of [0, " +
                        std::to_string(n) + "]");
  if (members.dimension() != n)
    throw InvalidFamily("layer family: member set built over n = " +
                        std::to_string(members.dimension()) + ", family says n = " +
                        std::to_string(n));
  for (Vertex v : members)
    if (weight(v) != r)
      throw InvalidFamily("layer family: member of weight " +
                          std::to_string(weight(v)) + " in layer r = " +
                          std::to_string(r));
}

std::optional<DaisyPattern> find_daisy(const LayerFamily& f, int s, int t) {
  validate_params(f.n, f.r, s, t);
  const int n = f.n;
  const int r = f.r;
  if (r + s - t > n) return std::nullopt;  // no crown fits
  if (f.size() < binomial(s, t)) return std::nullopt;
  const Vertex all = Hypercube(n).all_ones();
  for (Vertex stem : layer_members(n, r - t)) {
    for (Vertex grow : submasks_of_size(all & ~stem, s)) {
      const Vertex crown = stem | grow;
      bool complete = true;
      for (Vertex add : submasks_of_size(grow, t)) {
        if (!f.contains(stem | add)) {
          complete = false;
          break;
        }
      }
      if (complete) return DaisyPattern{n, r, s, t, stem, crown};
    }
  }
  return std::nullopt;
}

std::optional<DaisyPattern> find_daisy_through(const LayerFamily& f, Vertex v,
                                               int s, int t) {
  validate_params(f.n, f.r, s, t);
  Hypercube cube(f.n);
  cube.require_valid(v);
  if (weight(v) != f.r)
    throw std::invalid_argument("find_daisy_through: v must have weight r");
  const int r = f.r;
  if (r + s - t > f.n) return std::nullopt;
  // v inside an expansion forces stem <= v <= crown, so stems run over
  // submasks of v and crowns extend v by s - t fresh elements.
  for (Vertex stem : submasks_of_size(v, r - t)) {
    for (Vertex grow : submasks_of_size(cube.all_ones() & ~v, s - t)) {
      const Vertex crown = v | grow;
      bool complete = true;
      for (Vertex add : submasks_of_size(crown & ~stem, t)) {
        const Vertex member = stem | add;
        if (member != v && !f.contains(member)) {
          complete = false;
          break;
        }
      }
      if (complete) return DaisyPattern{f.n, r, s, t, stem, crown};
    }
  }
  return std::nullopt;
}

LayerFamily greedy_daisy_free(int n, int r, int s, int t,
                              std::optional<std::uint64_t> shuffle_seed) {
  validate_params(n, r, s, t);
  std::vector<Vertex> order = layer_members(n, r);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  LayerFamily fam = LayerFamily::empty(n, r);
  for (Vertex v : order)
    if (!find_daisy_through(fam, v, s, t)) fam.members.insert(v);
  return fam;
}

Rational TuranRecord::density() const {
  return Rational(BigInt(value), BigInt(binomial(n, r)));
}

TuranRecord turan_exact(int n, int r, int s, int t, std::chrono::milliseconds budget) {
  validate_params(n, r, s, t);
  TuranRecord rec{n, r, s, t};
  if (r + s - t > n) {
    // Vacuous constraint: the whole layer qualifies.
    rec.extremal_family = LayerFamily::full_layer(n, r);
    rec.value = rec.extremal_family.size();
    return rec;
  }

  const std::vector<Vertex> cands = layer_members(n, r);
  LayerFamily best_family = greedy_daisy_free(n, r, s, t);
  std::uint64_t best = best_family.size();

  LayerFamily chosen = LayerFamily::empty(n, r);
  const auto deadline = std::chrono::steady_clock::now() + budget;
  std::uint64_t nodes = 0;
  bool truncated = false;

  auto dive = [&](auto&& self, std::size_t idx) -> void {
    if (truncated) return;
    ++nodes;
    if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
      truncated = true;
      return;
    }
    if (chosen.size() + (cands.size() - idx) <= best) return;
    if (idx == cands.size()) {
      best = chosen.size();
      best_family = chosen;
      return;
    }
    const Vertex v = cands[idx];
    if (!find_daisy_through(chosen, v, s, t)) {
      chosen.members.insert(v);
      self(self, idx + 1);
      chosen.members.erase(v);
    }
    self(self, idx + 1);
  };
  dive(dive, 0);

  rec.value = best;
  rec.extremal_family = std::move(best_family);
  rec.optimal = !truncated;
  rec.nodes_explored = nodes;
  return rec;
}

std::optional<std::pair<std::size_t, std::size_t>> density_monotonicity_violation(
    std::span<const TuranRecord> records) {
  if (records.size() < 2) return std::nullopt;
  const bool along_n = records[1].r == records[0].r;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const TuranRecord& a = records[i];
    const TuranRecord& b = records[i + 1];
    const int dr = along_n ? 0 : 1;
    if (b.n != a.n + 1 || b.r != a.r + dr || b.s != a.s || b.t != a.t)
      throw std::invalid_argument(
          "density_monotonicity_violation: records " + std::to_string(i) + " and " +
          std::to_string(i + 1) +
          " do not continue a fixed-r or fixed-(n-r) chain");
  }
  for (std::size_t i = 0; i + 1 < records.size(); ++i)
    if (records[i].density() < records[i + 1].density()) return std::pair{i, i + 1};
  return std::nullopt;
}

}  // namespace visicube
