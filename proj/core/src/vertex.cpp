#include "visicube/vertex.hpp"

#include <stdexcept>

#include "visicube/errors.hpp"

namespace visicube {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (n > kMaxDimension) throw std::invalid_argument("binomial: n > 62");
  if (k > n - k) k = n - k;
  // The running product C(n-k+i, i) is integral at every step, so the
  // division is exact and nothing here can overflow for n <= 62.
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / i;
  return c;
}

std::vector<int> elements_of(Vertex v) {
  std::vector<int> out;
  while (v != 0) {
    int b = std::countr_zero(v);
    out.push_back(b + 1);
    v &= v - 1;
  }
  return out;
}

std::vector<Vertex> layer_members(int n, int r) {
  if (n < 0 || n > kMaxDimension) throw std::invalid_argument("layer_members: bad n");
  if (r < 0 || r > n) throw std::invalid_argument("layer_members: r out of [0, n]");
  std::vector<Vertex> out;
  out.reserve(binomial(n, r));
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  Vertex v = (Vertex{1} << r) - 1;
  Vertex limit = Vertex{1} << n;
  while (v < limit) {
    out.push_back(v);
    v = next_same_weight(v);
  }
  return out;
}

std::vector<Vertex> submasks_of_size(Vertex mask, int k) {
  int m = weight(mask);
  if (k < 0 || k > m) return {};
  std::vector<Vertex> out;
  out.reserve(binomial(m, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Enumerate k-subsets of [m] compactly, then scatter onto mask.  The
  // scatter is monotone, so numeric order is preserved.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = std::uint64_t{1} << m;
  while (s < limit) {
    out.push_back(expand_bits(s, mask));
    s = next_same_weight(s);
  }
  return out;
}

std::string to_bitstring(Vertex v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j)
    if (v >> j & 1) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

Hypercube::Hypercube(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("Hypercube: dimension must be in [1, 62], got " +
                                std::to_string(n));
}

void Hypercube::require_valid(Vertex v) const {
  if (!valid(v))
    throw DimensionMismatch("vertex " + std::to_string(v) +
                            " uses coordinates above n=" + std::to_string(n_));
}

}  // namespace visicube
