#include "visicube/mv_color.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "visicube/errors.hpp"

namespace visicube {
namespace {

// Middle layers are the only ones that can hold a monochromatic
// pattern: below d the stem (weight r - d) would be negative, above
// n - d the crown (weight r + d) would not fit.
std::optional<MonochromaticDaisy> monochromatic_daisy_in_layer(const Coloring& c,
                                                               int r) {
  const int n = c.dimension();
  const int d = c.d();
  const Vertex all = Hypercube(n).all_ones();
  for (Vertex stem : layer_members(n, r - d)) {
    for (Vertex grow : submasks_of_size(all & ~stem, 2 * d)) {
      const Vertex crown = stem | grow;
      int id = -1;
      bool mono = true;
      for (Vertex add : submasks_of_size(grow, d)) {
        const int member_id = c.id_of(stem | add);
        if (id < 0) {
          id = member_id;
        } else if (member_id != id) {
          mono = false;
          break;
        }
      }
      if (mono) return MonochromaticDaisy{r, id, stem, crown};
    }
  }
  return std::nullopt;
}

}  // namespace

Coloring::Coloring(int n, int d) : n_(n), d_(d) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("Coloring: dimension must be in [1, 62]");
  if (d < 1 || 2 * d > 255)
    throw std::invalid_argument("Coloring: d out of range");
  if (n > 30) throw ScaleCapExceeded("Coloring: refusing to allocate 2^n ids for n > 30");
  ids_.assign(std::size_t{1} << n, 0);
}

int Coloring::id_of(Vertex v) const {
  Hypercube(n_).require_valid(v);
  return ids_[static_cast<std::size_t>(v)];
}

void Coloring::assign(Vertex v, int residue, int part) {
  if (residue < 0 || residue >= d_)
    throw std::invalid_argument("Coloring::assign: residue out of [0, d)");
  if (part != 1 && part != 2)
    throw std::invalid_argument("Coloring::assign: part must be 1 or 2");
  assign_id(v, encode(residue, part));
}

void Coloring::assign_id(Vertex v, int id) {
  Hypercube(n_).require_valid(v);
  if (id < 0 || id >= color_count())
    throw std::invalid_argument("Coloring::assign_id: id out of [0, 2d)");
  ids_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(id);
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(color_count()));
  for (std::size_t v = 0; v < ids_.size(); ++v)
    buckets[ids_[v]].push_back(static_cast<Vertex>(v));
  std::vector<VertexSet> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.emplace_back(n_, std::move(bucket));
  return out;
}

VertexSet Coloring::class_members(int id) const {
  if (id < 0 || id >= color_count())
    throw std::invalid_argument("Coloring::class_members: id out of [0, 2d)");
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < ids_.size(); ++v)
    if (ids_[v] == id) members.push_back(static_cast<Vertex>(v));
  return VertexSet(n_, std::move(members));
}

void Coloring::require_layer_structure() const {
  for (std::size_t v = 0; v < ids_.size(); ++v) {
    const Vertex vertex = static_cast<Vertex>(v);
    const int r = weight(vertex);
    const int id = ids_[v];
    if (id / 2 != r % d_)
      throw std::invalid_argument("coloring: vertex " + std::to_string(v) +
                                  " at layer " + std::to_string(r) +
                                  " carries residue " + std::to_string(id / 2));
    const bool boundary = r <= d_ - 1 || r >= n_ - d_ + 1;
    if (boundary && id % 2 != 0)
      throw std::invalid_argument("coloring: boundary vertex " + std::to_string(v) +
                                  " must use part 1");
  }
}

Coloring layered_coloring(int n, int d, std::uint64_t seed) {
  if (d < 3) throw std::invalid_argument("layered_coloring: d must be at least 3");
  if (n < 2 * d) throw std::invalid_argument("layered_coloring: need n >= 2d");
  Coloring c(n, d);
  std::mt19937_64 rng(seed);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    const int r = weight(static_cast<Vertex>(v));
    const bool boundary = r <= d - 1 || r >= n - d + 1;
    // One explicit bit per middle vertex; rng() & 1 rather than a
    // distribution so the draw sequence is identical across platforms.
    const int part = boundary ? 1 : 1 + static_cast<int>(rng() & 1);
    c.assign(static_cast<Vertex>(v), r % d, part);
  }
  return c;
}

std::optional<MonochromaticDaisy> first_monochromatic_daisy(const Coloring& c) {
  const int n = c.dimension();
  const int d = c.d();
  for (int r = d; r <= n - d; ++r)
    if (auto found = monochromatic_daisy_in_layer(c, r)) return found;
  return std::nullopt;
}

RepairOutcome moser_tardos_repair(const Coloring& c, std::uint64_t max_rounds,
                                  std::uint64_t seed) {
  c.require_layer_structure();
  RepairOutcome out{c, 0, true};
  std::mt19937_64 rng(seed);
  while (true) {
    auto bad = first_monochromatic_daisy(out.coloring);
    if (!bad) return out;
    if (out.rounds >= max_rounds) {
      out.converged = false;
      return out;
    }
    // Re-flip the coins of the violated pattern's members, ascending.
    const int residue = bad->layer % out.coloring.d();
    for (Vertex add : submasks_of_size(bad->crown & ~bad->stem, out.coloring.d())) {
      const int part = 1 + static_cast<int>(rng() & 1);
      out.coloring.assign(bad->stem | add, residue, part);
    }
    ++out.rounds;
  }
}

std::optional<ColoringViolation> coloring_violation(const Coloring& c, int threads) {
  if (c.dimension() > kColoringCheckDimensionCap)
    throw ScaleCapExceeded("coloring_violation: n = " + std::to_string(c.dimension()) +
                           " exceeds cap " + std::to_string(kColoringCheckDimensionCap));
  for (int id = 0; id < c.color_count(); ++id) {
    VertexSet members = c.class_members(id);
    if (auto pair = mv_violation(members, threads))
      return ColoringViolation{id, *pair};
  }
  return std::nullopt;
}

LLLReport lll_feasibility(int n, int d, int r) {
  if (d < 1) throw std::invalid_argument("lll_feasibility: d must be positive");
  if (r < d || r > n - d)
    throw std::invalid_argument("lll_feasibility: need d <= r <= n - d");
  LLLReport rep;
  rep.n = n;
  rep.d = d;
  rep.r = r;
  const std::uint64_t members = binomial(2 * d, d);
  rep.g_bound = BigInt(members) * binomial(r, d) * binomial(n - r, d);
  // Past ~10^6 expansion members the exact 2^C(2d,d) denominator stops
  // being worth building; the criterion is then certainly satisfied
  // because its numerator has far fewer bits than C(2d,d).
  if (members > 1'000'000) {
    rep.p = 0;
    rep.criterion = 0;
    rep.satisfied = true;
    return rep;
  }
  // Monochromatic-in-one-part probability 2^(1 - C(2d,d)): all members
  // land on one fixed part, times 2 for the choice of part.
  rep.p = Rational(BigInt(2), int_pow(2, static_cast<unsigned>(members)));
  const Rational e_upper(BigInt(27182818285LL), int_pow(10, 10));
  rep.criterion = e_upper * rep.p * Rational(rep.g_bound + 1);
  rep.satisfied = rep.criterion < 1;
  return rep;
}

std::optional<BlockingTriple> blocking_triple_witness(const Coloring& c, Vertex fixed,
                                                      Vertex free) {
  Hypercube cube(c.dimension());
  cube.require_valid(fixed);
  cube.require_valid(free);
  if ((fixed & free) != 0)
    throw std::invalid_argument("blocking_triple_witness: fixed and free overlap");
  const int f = weight(free);
  // mono_id[i] = the single color id of subcube layer i, or -1.
  std::vector<int> mono_id(static_cast<std::size_t>(f) + 1, -1);
  for (int i = 0; i <= f; ++i) {
    int id = -1;
    bool mono = true;
    for (Vertex s : submasks_of_size(free, i)) {
      const int member_id = c.id_of(fixed | s);
      if (id < 0) {
        id = member_id;
      } else if (member_id != id) {
        mono = false;
        break;
      }
    }
    mono_id[static_cast<std::size_t>(i)] = mono ? id : -1;
  }
  for (int id = 0; id < c.color_count(); ++id) {
    std::vector<int> layers;
    for (int i = 0; i <= f; ++i)
      if (mono_id[static_cast<std::size_t>(i)] == id) layers.push_back(i);
    if (layers.size() < 3) continue;
    const int i = layers[0];
    const int j = layers[1];
    const int k = layers[2];
    // Bottom member of a subcube layer: the lowest elements of free.
    auto bottom = [&](int count) {
      Vertex s = 0;
      Vertex rest = free;
      for (int taken = 0; taken < count; ++taken) {
        const Vertex low = rest & (0 - rest);
        s |= low;
        rest ^= low;
      }
      return fixed | s;
    };
    BlockingTriple triple{bottom(i), bottom(k), j, id};
    // Self-check: every shortest a,b-path stays inside the subcube and
    // crosses layer j, which is entirely this class, so the pair must
    // be invisible with respect to the class.
    if (is_visible(triple.a, triple.b, c.class_members(id)))
      throw InvariantBreach("blocking_triple_witness: triple failed its own check");
    return triple;
  }
  return std::nullopt;
}

}  // namespace visicube
