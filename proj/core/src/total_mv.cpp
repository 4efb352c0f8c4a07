#include "visicube/total_mv.hpp"

#include <stdexcept>
#include <string>

#include "visicube/errors.hpp"

namespace visicube {

std::optional<PairWitness> distance2_violation(const VertexSet& m) {
  const auto& mem = m.members();
  for (std::size_t i = 0; i + 1 < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (dist(mem[i], mem[j]) == 2) return PairWitness{mem[i], mem[j]};
  return std::nullopt;
}

VertexSet hamming_code(int m) {
  if (m < 2) throw std::invalid_argument("hamming_code: need m >= 2");
  if (m > 4)
    throw ScaleCapExceeded("hamming_code: m = " + std::to_string(m) +
                           " needs a 2^" + std::to_string((1 << m) - 1) +
                           " sweep, cap is m = 4");
  const int n = (1 << m) - 1;
  std::vector<Vertex> words;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    // Parity check: position j contributes its binary expansion j, so
    // the word is a codeword iff the XOR of its set positions is 0.
    unsigned syndrome = 0;
    for (Vertex rest = v; rest != 0; rest &= rest - 1)
      syndrome ^= static_cast<unsigned>(std::countr_zero(rest)) + 1;
    if (syndrome == 0) words.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(n, std::move(words));
}

int position_norm(Vertex x) {
  int norm = 0;
  for (int e : elements_of(x)) norm += e;
  return norm;
}

WeightClassList weight_classes(int n, int w) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("weight_classes: n out of [1, 62]");
  if (w < 0 || w > n) throw std::invalid_argument("weight_classes: w out of [0, n]");
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n));
  for (Vertex x : layer_members(n, w))
    buckets[static_cast<std::size_t>(position_norm(x) % n)].push_back(x);
  WeightClassList out;
  out.classes.reserve(buckets.size());
  for (int residue = 0; residue < n; ++residue)
    out.classes.push_back(
        WeightClass{n, w, residue, VertexSet(n, std::move(buckets[residue]))});
  for (std::size_t i = 1; i < out.classes.size(); ++i)
    if (out.classes[i].members.size() > out.classes[out.best_index].members.size())
      out.best_index = i;
  return out;
}

namespace {

bool side_a(int w) {
  const int rem = w % 4;
  return rem == 0 || rem == 1;
}

}  // namespace

TotalMvConstruction build_ab(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("build_ab: n out of [1, 62]");
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (int w = 0; w <= n; ++w) {
    const WeightClassList wc = weight_classes(n, w);
    const VertexSet& best = wc.classes[wc.best_index].members;
    auto& target = side_a(w) ? a : b;
    target.insert(target.end(), best.begin(), best.end());
  }
  TotalMvConstruction out{n, VertexSet(n, std::move(a)), VertexSet(n, std::move(b))};
  // The weight-gap argument says both groups are safe; trust it only
  // after an actual pair scan.
  if (auto pair = distance2_violation(out.group_a))
    throw InvariantBreach("build_ab: group A holds a distance-2 pair (" +
                          std::to_string(pair->u) + ", " + std::to_string(pair->v) + ")");
  if (auto pair = distance2_violation(out.group_b))
    throw InvariantBreach("build_ab: group B holds a distance-2 pair (" +
                          std::to_string(pair->u) + ", " + std::to_string(pair->v) + ")");
  return out;
}

std::vector<PartitionClass> total_mv_partition(int n) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("total_mv_partition: n out of [1, 30]");
  // Bucket index: residue * 2 for side A, residue * 2 + 1 for side B.
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(2 * n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    const Vertex x = static_cast<Vertex>(v);
    const int residue = position_norm(x) % n;
    const std::size_t idx = static_cast<std::size_t>(residue) * 2 +
                            (side_a(weight(x)) ? 0 : 1);
    buckets[idx].push_back(x);
  }
  std::vector<PartitionClass> out;
  for (int residue = 0; residue < n; ++residue) {
    for (int side = 0; side < 2; ++side) {
      auto& bucket = buckets[static_cast<std::size_t>(residue) * 2 +
                             static_cast<std::size_t>(side)];
      if (bucket.empty()) continue;
      out.push_back(PartitionClass{residue, side == 0 ? 'A' : 'B',
                                   VertexSet(n, std::move(bucket))});
    }
  }
  return out;
}

bool counting_upper_check(const VertexSet& m) {
  const int n = m.dimension();
  if (n > kCountingCheckDimensionCap)
    throw ScaleCapExceeded("counting_upper_check: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(kCountingCheckDimensionCap));
  if (auto pair = distance2_violation(m))
    throw std::invalid_argument("counting_upper_check: input has members " +
                                std::to_string(pair->u) + " and " +
                                std::to_string(pair->v) + " at distance 2");
  const int half = n / 2;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    const Vertex x = static_cast<Vertex>(v);
    int inside = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.contains(x ^ bit(i + 1) ^ bit(j + 1))) ++inside;
    if (m.contains(x)) {
      // Members must see all C(n, 2) distance-2 words outside m.
      if (inside != 0) return false;
    } else if (inside > half) {
      return false;
    }
  }
  return true;
}

}  // namespace visicube
