#include "visicube/visibility.hpp"

#include <atomic>
#include <string>
#include <thread>

#include "visicube/errors.hpp"

namespace visicube {
namespace {

inline bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t i) {
  return bits[i >> 6] >> (i & 63) & 1;
}
inline void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

int effective_threads(int requested) {
  if (requested <= 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(requested), hw));
}

// Shared shape of mv_violation and total_mv_violation: scan pairs
// (i, j), i < j, of an indexed vertex list, lexicographically, and
// report the first invisible pair.  The visibility probe only depends on
// the two vertices, so threads own disjoint i-strides and the
// lexicographic minimum over their finds equals the sequential answer.
template <typename VertexAt>
std::optional<PairWitness> first_invisible_pair(std::uint64_t count,
                                                VertexAt vertex_at,
                                                const VertexSet& m,
                                                int threads) {
  if (count < 2) return std::nullopt;
  const int t = effective_threads(threads);
  if (t == 1) {
    for (std::uint64_t i = 0; i + 1 < count; ++i)
      for (std::uint64_t j = i + 1; j < count; ++j)
        if (!is_visible(vertex_at(i), vertex_at(j), m))
          return PairWitness{vertex_at(i), vertex_at(j)};
    return std::nullopt;
  }

  // best_i lets late threads skip rows that cannot beat an already found
  // violation; it is only ever lowered, so no real find is skipped.
  std::atomic<std::uint64_t> best_i{count};
  std::vector<std::optional<PairWitness>> found(static_cast<std::size_t>(t));
  std::vector<std::uint64_t> found_row(static_cast<std::size_t>(t), count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = static_cast<std::uint64_t>(w); i + 1 < count;
           i += static_cast<std::uint64_t>(t)) {
        if (i > best_i.load(std::memory_order_relaxed)) continue;
        for (std::uint64_t j = i + 1; j < count; ++j) {
          if (!is_visible(vertex_at(i), vertex_at(j), m)) {
            found[static_cast<std::size_t>(w)] = PairWitness{vertex_at(i), vertex_at(j)};
            found_row[static_cast<std::size_t>(w)] = i;
            std::uint64_t cur = best_i.load(std::memory_order_relaxed);
            while (i < cur && !best_i.compare_exchange_weak(cur, i)) {
            }
            break;  // first violation in this row; lower rows decide the rest
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  int winner = -1;
  for (int w = 0; w < t; ++w) {
    if (!found[static_cast<std::size_t>(w)]) continue;
    if (winner < 0 || found_row[static_cast<std::size_t>(w)] <
                          found_row[static_cast<std::size_t>(winner)])
      winner = w;
  }
  if (winner < 0) return std::nullopt;
  return found[static_cast<std::size_t>(winner)];
}

}  // namespace

bool is_visible(Vertex u, Vertex v, const VertexSet& m) {
  Hypercube cube(m.dimension());
  cube.require_valid(u);
  cube.require_valid(v);
  const Vertex diff = u ^ v;
  const int k = weight(diff);
  if (k <= 1) return true;  // equal or adjacent: the trivial path works
  if (k > kVisibilityDistanceCap)
    throw ScaleCapExceeded("is_visible: dist(u, v) = " + std::to_string(k) +
                           " exceeds cap " + std::to_string(kVisibilityDistanceCap));

  // Shortest u-v paths flip exactly the bits of diff, one at a time, so
  // they are orderings of diff's bits.  State s (a submask of diff,
  // compacted to k bits) stands for the vertex u ^ expand(s); it is
  // reachable when that vertex is off-limits-free (endpoints exempt) and
  // some single-bit-smaller state is.  Increasing numeric order visits
  // subsets before supersets.
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::vector<std::uint64_t> reach((full >> 6) + 1, 0);
  set_bit(reach, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    if (s != full && m.contains(u ^ expand_bits(s, diff))) continue;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      std::uint64_t b = rest & (0 - rest);
      if (test_bit(reach, s ^ b)) {
        set_bit(reach, s);
        break;
      }
    }
  }
  return test_bit(reach, full);
}

std::optional<PairWitness> mv_violation(const VertexSet& m, int threads) {
  const auto& mem = m.members();
  return first_invisible_pair(
      mem.size(), [&](std::uint64_t i) { return mem[static_cast<std::size_t>(i)]; },
      m, threads);
}

std::optional<PairWitness> total_mv_violation(const VertexSet& m, int threads,
                                              int dimension_cap) {
  const int n = m.dimension();
  if (n > dimension_cap)
    throw ScaleCapExceeded("total_mv_violation: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(dimension_cap));
  const std::uint64_t count = std::uint64_t{1} << n;
  return first_invisible_pair(
      count, [](std::uint64_t i) { return static_cast<Vertex>(i); }, m, threads);
}

std::vector<Vertex> interval_members(Vertex a, Vertex b, int r) {
  const Vertex core = a & b;
  const int inner = r - weight(core);
  std::vector<Vertex> diff_subsets = submasks_of_size(a ^ b, inner);
  std::vector<Vertex> out;
  out.reserve(diff_subsets.size());
  // OR-ing the fixed core into ascending submasks of the (disjoint)
  // symmetric difference keeps the order ascending.
  for (Vertex s : diff_subsets) out.push_back(core | s);
  return out;
}

}  // namespace visicube
