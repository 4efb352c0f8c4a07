#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace visicube {

// A vertex of the hypercube Q_n, stored as the characteristic word of a
// subset of {1,...,n}: coordinate j lives in bit j-1.  With this packing
// the numeric order on words is exactly colex order on subsets (the most
// significant differing bit is the largest element of the symmetric
// difference), which the rest of the library leans on for determinism.
using Vertex = std::uint64_t;

// One spare bit is kept so 2^n and C(n,r) always fit in uint64.
inline constexpr int kMaxDimension = 62;

constexpr int weight(Vertex v) noexcept { return std::popcount(v); }

// Hamming distance, i.e. |u delta v| as sets.
constexpr int dist(Vertex u, Vertex v) noexcept { return std::popcount(u ^ v); }

constexpr Vertex bit(int coordinate) noexcept {
  return Vertex{1} << (coordinate - 1);
}

// Scatter the k low bits of `compact` onto the k set bits of `mask`
// (software pdep).  Maps rank-i source bit to the i-th lowest mask bit.
constexpr Vertex expand_bits(std::uint64_t compact, Vertex mask) noexcept {
  Vertex out = 0;
  while (mask != 0) {
    Vertex low = mask & (0 - mask);
    if (compact & 1) out |= low;
    compact >>= 1;
    mask ^= low;
  }
  return out;
}

// Next word with the same popcount in increasing numeric order (Gosper).
// Caller stops before the result overflows the intended range.
constexpr std::uint64_t next_same_weight(std::uint64_t v) noexcept {
  std::uint64_t c = v & (0 - v);
  std::uint64_t r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

// C(n, k); exact for all n <= 62 (peak value C(62,31) < 2^63).
std::uint64_t binomial(int n, int k);

// Members of a single coordinate position list, smallest first.
std::vector<int> elements_of(Vertex v);

// All weight-r vertices of Q_n in increasing numeric (= colex) order.
std::vector<Vertex> layer_members(int n, int r);

// All size-k submasks of `mask`, increasing numeric order.
std::vector<Vertex> submasks_of_size(Vertex mask, int k);

// "0110"-style rendering, leftmost character = coordinate 1.
std::string to_bitstring(Vertex v, int n);

// Fixed cube dimension plus the handful of checks everything else needs.
class Hypercube {
public:
  explicit Hypercube(int n);

  int dimension() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  // The word with all n coordinate bits set (the top vertex).
  Vertex all_ones() const noexcept { return (Vertex{1} << n_) - 1; }
  bool valid(Vertex v) const noexcept { return (v & ~all_ones()) == 0; }
  // Throws DimensionMismatch when v uses a coordinate above n.
  void require_valid(Vertex v) const;

private:
  int n_;
};

}  // namespace visicube
