#include "visicube/mv_build.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "visicube/errors.hpp"
#include "visicube/visibility.hpp"

namespace visicube {
namespace {

int inferred_dimension(Vertex joined) {
  return std::max(static_cast<int>(std::bit_width(joined)), 1);
}

// Equal-weight endpoints, connected through the two layers above: add
// the least missing element, then alternate add/delete in ascending
// element order, closing with the last delete.  Internal weights are
// r+1 and r+2 only.
Path zigzag_up(Vertex a, Vertex b) {
  const std::vector<int> del = elements_of(a & ~b);
  const std::vector<int> add = elements_of(b & ~a);
  const std::size_t k = add.size();
  Path p{inferred_dimension(a | b), {a}};
  Vertex cur = a | bit(add[0]);
  p.vertices.push_back(cur);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cur |= bit(add[i + 1]);
    p.vertices.push_back(cur);
    cur &= ~bit(del[i]);
    p.vertices.push_back(cur);
  }
  cur &= ~bit(del[k - 1]);
  p.vertices.push_back(cur);
  return p;
}

// Mirror image through the two layers below; internal weights r'-1 and
// r'-2 only.
Path zigzag_down(Vertex a, Vertex b) {
  const std::vector<int> del = elements_of(a & ~b);
  const std::vector<int> add = elements_of(b & ~a);
  const std::size_t k = del.size();
  Path p{inferred_dimension(a | b), {a}};
  Vertex cur = a & ~bit(del[0]);
  p.vertices.push_back(cur);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cur &= ~bit(del[i + 1]);
    p.vertices.push_back(cur);
    cur |= bit(add[i]);
    p.vertices.push_back(cur);
  }
  cur |= bit(add[k - 1]);
  p.vertices.push_back(cur);
  return p;
}

// weight(a) < weight(b).  Each surplus element of a costs one extra
// up-down excursion; afterwards the remaining elements of b are added
// in ascending order.  Internal weights stay strictly between the
// endpoint weights whenever the gap is at least 3.
Path climb(Vertex a, Vertex b) {
  const std::vector<int> add = elements_of(b & ~a);
  const std::vector<int> del = elements_of(a & ~b);
  const std::size_t k = add.size();
  const std::size_t m = del.size();
  Path p{inferred_dimension(a | b), {a}};
  Vertex cur = a;
  if (m == 0) {
    for (int e : add) {
      cur |= bit(e);
      p.vertices.push_back(cur);
    }
    return p;
  }
  cur |= bit(add[0]);
  p.vertices.push_back(cur);
  for (std::size_t i = 0; i < m; ++i) {
    cur |= bit(add[i + 1]);
    p.vertices.push_back(cur);
    cur &= ~bit(del[i]);
    p.vertices.push_back(cur);
  }
  for (std::size_t i = m + 1; i < k; ++i) {
    cur |= bit(add[i]);
    p.vertices.push_back(cur);
  }
  return p;
}

Path connect(Vertex a, Vertex b, const LayeredConstruction& k) {
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa > wb) return connect(b, a, k).reversed();
  Path p;
  if (wa == wb) {
    // Pairs in the top selected layer go downward; there may be no
    // selected layer above them to justify the upward detour.
    const bool mirror = wa == k.top_selected_layer() && wa >= 2;
    p = mirror ? zigzag_down(a, b) : zigzag_up(a, b);
  } else if (wb - wa == k.d) {
    p = climb(a, b);
  } else {
    const int mid = wa + k.d;
    if ((wb - wa) % k.d != 0 || k.families.count(mid) == 0)
      throw InvariantBreach("witness_path: endpoints do not sit on selected layers");
    const Vertex c = find_hole(a, b, k.families.at(mid), k.d);
    p = connect(a, c, k);
    Path rest = connect(c, b, k);
    p.vertices.insert(p.vertices.end(), rest.vertices.begin() + 1, rest.vertices.end());
  }
  p.n = k.n;
  return p;
}

}  // namespace

int LayeredConstruction::top_selected_layer() const {
  return residue + d * ((n - residue) / d);
}

std::uint64_t LayeredConstruction::size() const {
  std::uint64_t total = 0;
  for (const auto& [r, fam] : families) total += fam.size();
  return total;
}

bool LayeredConstruction::contains(Vertex v) const {
  auto it = families.find(weight(v));
  return it != families.end() && it->second.contains(v);
}

VertexSet LayeredConstruction::as_vertex_set() const {
  std::vector<Vertex> all;
  all.reserve(size());
  for (const auto& [r, fam] : families)
    all.insert(all.end(), fam.members.begin(), fam.members.end());
  return VertexSet(n, std::move(all));
}

void LayeredConstruction::validate() const {
  if (d < 3) throw std::invalid_argument("layered construction: d must be at least 3");
  if (n < d) throw std::invalid_argument("layered construction: need n >= d");
  if (residue < 0 || residue >= d)
    throw std::invalid_argument("layered construction: residue out of [0, d)");
  for (int r = residue; r <= n; r += d)
    if (!families.count(r))
      throw InvalidFamily("layered construction: no family for selected layer " +
                          std::to_string(r));
  for (const auto& [r, fam] : families) {
    if (!layer_selected(r))
      throw InvalidFamily("layered construction: family at unselected layer " +
                          std::to_string(r));
    fam.validate();
    if (fam.n != n)
      throw InvalidFamily("layered construction: family at layer " + std::to_string(r) +
                          " built for a different cube");
    if (fam.r != r)
      throw InvalidFamily("layered construction: family keyed at layer " +
                          std::to_string(r) + " says r = " + std::to_string(fam.r));
    if (boundary_layer(r)) {
      if (fam.size() != binomial(n, r))
        throw InvalidFamily("layered construction: boundary layer " + std::to_string(r) +
                            " must be the complete layer");
    } else if (auto daisy = find_daisy(fam, 2 * d, d)) {
      throw InvalidFamily("layered construction: family at layer " + std::to_string(r) +
                          " holds a forbidden daisy (stem " + std::to_string(daisy->stem) +
                          ", crown " + std::to_string(daisy->crown) + ")");
    }
  }
}

FamilySupplier greedy_supplier() {
  return [](int n, int r, int s, int t) { return greedy_daisy_free(n, r, s, t); };
}

FamilySupplier exact_supplier(std::chrono::milliseconds per_layer_budget) {
  return [per_layer_budget](int n, int r, int s, int t) {
    return turan_exact(n, r, s, t, per_layer_budget).extremal_family;
  };
}

FamilySupplier empty_supplier() {
  return [](int n, int r, int, int) { return LayerFamily::empty(n, r); };
}

FamilySupplier fixed_supplier(std::map<int, LayerFamily> families) {
  return [families = std::move(families)](int n, int r, int, int) {
    auto it = families.find(r);
    if (it == families.end())
      throw InvalidFamily("fixed supplier: no family for layer " + std::to_string(r));
    if (it->second.n != n || it->second.r != r)
      throw InvalidFamily("fixed supplier: family for layer " + std::to_string(r) +
                          " carries mismatched parameters");
    return it->second;
  };
}

LayeredConstruction build_layered_set(int n, int d, int residue,
                                      const FamilySupplier& supplier) {
  if (d < 3) throw std::invalid_argument("build_layered_set: d must be at least 3");
  if (n < d || n > kMaxDimension)
    throw std::invalid_argument("build_layered_set: need d <= n <= 62");
  if (residue < 0 || residue >= d)
    throw std::invalid_argument("build_layered_set: residue out of [0, d)");
  LayeredConstruction out{n, d, residue, {}};
  for (int r = residue; r <= n; r += d) {
    LayerFamily fam = out.boundary_layer(r) ? LayerFamily::full_layer(n, r)
                                            : supplier(n, r, 2 * d, d);
    out.families.emplace(r, std::move(fam));
  }
  out.validate();
  return out;
}

LayeredConstruction best_layered_set(int n, int d, const FamilySupplier& supplier) {
  std::optional<LayeredConstruction> best;
  for (int residue = 0; residue < d; ++residue) {
    LayeredConstruction cand = build_layered_set(n, d, residue, supplier);
    if (!best || cand.size() > best->size()) best = std::move(cand);
  }
  return *best;
}

Vertex find_hole(Vertex a, Vertex b, const LayerFamily& f, int d) {
  if (d < 1) throw std::invalid_argument("find_hole: d must be positive");
  Hypercube cube(f.n);
  cube.require_valid(a);
  cube.require_valid(b);
  if (weight(a) > f.r - d)
    throw std::invalid_argument("find_hole: need weight(a) <= r - d");
  if (weight(b) < f.r + d)
    throw std::invalid_argument("find_hole: need weight(b) >= r + d");
  for (Vertex c : interval_members(a, b, f.r))
    if (!f.contains(c)) return c;
  throw InvariantBreach(
      "find_hole: interval at layer " + std::to_string(f.r) +
      " lies inside the family, which therefore holds a forbidden daisy");
}

Path layer_pair_path(Vertex a, Vertex b, int r, int r_prime) {
  if (r < 0 || r_prime < r + 3)
    throw std::invalid_argument("layer_pair_path: need 0 <= r and r + 3 <= r'");
  if (a == b) throw std::invalid_argument("layer_pair_path: endpoints must differ");
  const int wa = weight(a);
  const int wb = weight(b);
  auto in_layers = [&](int w) { return w == r || w == r_prime; };
  if (!in_layers(wa) || !in_layers(wb))
    throw std::invalid_argument("layer_pair_path: endpoints must lie in L_r or L_r'");
  if (wa == r && wb == r) return zigzag_up(a, b);
  if (wa == r_prime && wb == r_prime) return zigzag_down(a, b);
  if (wa == r) return climb(a, b);
  return climb(b, a).reversed();
}

Path through_point_path(Vertex a, Vertex b, Vertex c) {
  if (!in_interval(c, a, b))
    throw std::invalid_argument(
        "through_point_path: c must lie between a intersect b and a union b");
  Path p{inferred_dimension(a | b), {a}};
  Vertex cur = a;
  for (int e : elements_of(a ^ c)) {
    cur ^= bit(e);
    p.vertices.push_back(cur);
  }
  for (int e : elements_of(c ^ b)) {
    cur ^= bit(e);
    p.vertices.push_back(cur);
  }
  return p;
}

Path witness_path(Vertex a, Vertex b, const LayeredConstruction& k) {
  Hypercube cube(k.n);
  cube.require_valid(a);
  cube.require_valid(b);
  if (!k.contains(a) || !k.contains(b))
    throw std::invalid_argument("witness_path: endpoints must belong to the construction");
  if (a == b) return Path{k.n, {a}};
  return connect(a, b, k);
}

BoundReport layered_size_bound(int n, int d,
                               const std::map<int, std::uint64_t>& ex_values) {
  if (d < 3) throw std::invalid_argument("layered_size_bound: d must be at least 3");
  if (n < d || n > kMaxDimension)
    throw std::invalid_argument("layered_size_bound: need d <= n <= 62");
  BoundReport rep;
  rep.n = n;
  rep.d = d;
  BigInt middle_sum = 0;
  for (int r = d; r <= n - d; ++r) {
    auto it = ex_values.find(r);
    if (it == ex_values.end())
      throw std::invalid_argument("layered_size_bound: no value for middle layer " +
                                  std::to_string(r));
    rep.middle_values[r] = it->second;
    middle_sum += it->second;
  }
  for (const auto& [r, value] : ex_values)
    if (r < d || r > n - d)
      throw std::invalid_argument("layered_size_bound: value for layer " +
                                  std::to_string(r) + " outside the middle range");
  std::uint64_t boundary = 0;
  for (int r = 0; r < d; ++r) boundary += binomial(n, r);
  rep.boundary_doubled = 2 * boundary;
  rep.total = Rational(middle_sum + rep.boundary_doubled, d);
  rep.fraction_of_cube = rep.total / int_pow(2, static_cast<unsigned>(n));
  return rep;
}

Rational euler_product_lower(unsigned q, unsigned K) {
  if (q < 2) throw std::invalid_argument("euler_product_lower: need q >= 2");
  if (K < 1) throw std::invalid_argument("euler_product_lower: need K >= 1");
  Rational prod = 1;
  for (unsigned k = 1; k <= K; ++k) {
    const BigInt qk = int_pow(q, k);
    prod *= Rational(qk - 1, qk);
  }
  const Rational tail = Rational(1) - Rational(BigInt(1), int_pow(q, K) * (q - 1));
  return prod * tail;
}

bool density_constant_check() {
  const Rational advertised(14, 75);
  return Rational(56, 100) / 3 == advertised &&
         euler_product_lower(3, 20) / 3 > advertised;
}

}  // namespace visicube
