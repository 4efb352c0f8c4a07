#include <doctest.h>

#include <random>

#include "visicube/daisy.hpp"
#include "visicube/errors.hpp"
#include "visicube/mv_build.hpp"
#include "visicube/vertex.hpp"
#include "visicube/visibility.hpp"

using namespace visicube;

TEST_CASE("construction bookkeeping") {
  LayeredConstruction k = build_layered_set(7, 3, 1, greedy_supplier());
  CHECK(k.layer_selected(1));
  CHECK(k.layer_selected(4));
  CHECK(k.layer_selected(7));
  CHECK_FALSE(k.layer_selected(2));
  CHECK(k.boundary_layer(1));
  CHECK(k.boundary_layer(7));
  CHECK_FALSE(k.boundary_layer(4));
  CHECK(k.top_selected_layer() == 7);
  // Boundary layers are complete.
  CHECK(k.families.at(1).size() == 7);
  CHECK(k.families.at(7).size() == 1);
  CHECK(k.size() == 7 + k.families.at(4).size() + 1);
  CHECK(k.contains(bit(3)));
  CHECK_FALSE(k.contains(bit(1) | bit(2)));
  CHECK(k.as_vertex_set().size() == k.size());
  k.validate();
}

TEST_CASE("builder rejects broken families") {
  // A middle layer containing a full daisy fails validation.
  std::map<int, LayerFamily> families;
  families.insert({4, LayerFamily::full_layer(7, 4)});
  CHECK_THROWS_AS(build_layered_set(7, 3, 1, fixed_supplier(families)),
                  InvalidFamily);
  // A supplier answering for the wrong layer fails too.
  FamilySupplier wrong = [](int n, int, int, int) {
    return LayerFamily::empty(n, 0);
  };
  CHECK_THROWS_AS(build_layered_set(7, 3, 1, wrong), InvalidFamily);
}

TEST_CASE("empty supplier still yields a valid construction") {
  LayeredConstruction k = build_layered_set(7, 3, 0, empty_supplier());
  k.validate();
  CHECK(k.families.at(3).size() == 0);
  CHECK(is_mv_set(k.as_vertex_set()));
}

TEST_CASE("best residue wins, ties to the smaller") {
  LayeredConstruction best = best_layered_set(7, 3, greedy_supplier());
  for (int lambda = 0; lambda < 3; ++lambda) {
    CHECK(best.size() >= build_layered_set(7, 3, lambda, greedy_supplier()).size());
  }
}

TEST_CASE("greedy constructions pass the exhaustive verifier") {
  for (int n = 6; n <= 8; ++n) {
    for (int lambda = 0; lambda < 3; ++lambda) {
      LayeredConstruction k = build_layered_set(n, 3, lambda, greedy_supplier());
      CHECK(is_mv_set(k.as_vertex_set()));
    }
  }
}

TEST_CASE("hole finding picks the least free interval vertex") {
  LayerFamily none = LayerFamily::empty(6, 3);
  CHECK(find_hole(0, 63, none, 3) == 7);  // {1,2,3}

  // Fill the interval's layer completely: the guaranteed hole is gone,
  // which the function treats as an internal failure.
  LayerFamily full = LayerFamily::full_layer(6, 3);
  CHECK_THROWS_AS(find_hole(0, 63, full, 3), InvariantBreach);

  // Endpoints too close to the layer violate the precondition.
  CHECK_THROWS_AS(find_hole(7, 63, none, 3), std::invalid_argument);
}

TEST_CASE("hole finding skips family members") {
  LayerFamily f{6, 3, VertexSet(6, {7, 11})};  // {1,2,3}, {1,2,4}
  CHECK(find_hole(0, 63, f, 3) == 13);         // {1,3,4}
}

TEST_CASE("climbing path matches the published trace") {
  // From {1} to {2,3,4,5}: add 2, drop 1 against add 3, then climb.
  Path p = layer_pair_path(bit(1), bit(2) | bit(3) | bit(4) | bit(5), 1, 4);
  CHECK(p.vertices == std::vector<Vertex>{1, 3, 7, 6, 14, 30});
  CHECK(p.shortest());
}

TEST_CASE("descending layer pairs reuse the climb mirrored") {
  Vertex a = bit(2) | bit(3) | bit(4) | bit(5);
  // Layer numbers are passed low-to-high; the endpoints may arrive in either order.
  Path p = layer_pair_path(a, bit(1), 1, 4);
  CHECK(p.vertices.front() == a);
  CHECK(p.vertices.back() == bit(1));
  CHECK(p.shortest());
}

TEST_CASE("through-point paths visit the waypoint") {
  Vertex a = bit(1);
  Vertex b = bit(1) | bit(2) | bit(3) | bit(4);
  Vertex c = bit(1) | bit(3);
  Path p = through_point_path(a, b, c);
  CHECK(p.shortest());
  CHECK(p.vertices.front() == a);
  CHECK(p.vertices.back() == b);
  bool seen = false;
  for (Vertex v : p.vertices) seen = seen || v == c;
  CHECK(seen);
  CHECK_THROWS_AS(through_point_path(a, b, bit(5)), std::invalid_argument);
}

TEST_CASE("witness paths dodge the construction") {
  for (int n : {7, 8}) {
    for (int lambda = 0; lambda < 3; ++lambda) {
      LayeredConstruction k = build_layered_set(n, 3, lambda, greedy_supplier());
      VertexSet m = k.as_vertex_set();
      const std::vector<Vertex>& verts = m.members();
      std::mt19937_64 rng(7u * n + lambda);
      for (int trial = 0; trial < 200; ++trial) {
        Vertex a = verts[rng() % verts.size()];
        Vertex b = verts[rng() % verts.size()];
        if (a == b) continue;
        Path p = witness_path(a, b, k);
        CHECK(p.vertices.front() == a);
        CHECK(p.vertices.back() == b);
        CHECK(p.shortest());
        CHECK(p.internally_avoids(m));
      }
    }
  }
}

TEST_CASE("witness paths work at the top selected layer") {
  // Q_8, residues 1: the top selected layer 7 holds 8 vertices, and
  // same-layer pairs there must dip downward.
  LayeredConstruction k = build_layered_set(8, 3, 1, greedy_supplier());
  VertexSet m = k.as_vertex_set();
  Vertex a = k.families.at(7).members[0];
  Vertex b = k.families.at(7).members[5];
  Path p = witness_path(a, b, k);
  CHECK(p.shortest());
  CHECK(p.internally_avoids(m));
  for (Vertex v : p.vertices) CHECK(weight(v) <= 7);
}

TEST_CASE("witness path endpoints must belong to the set") {
  LayeredConstruction k = build_layered_set(7, 3, 0, greedy_supplier());
  CHECK_THROWS_AS(witness_path(bit(1), bit(2), k), std::invalid_argument);
  Vertex member = k.families.at(0).members[0];
  Path self = witness_path(member, member, k);
  CHECK(self.vertices == std::vector<Vertex>{member});
}

TEST_CASE("averaging bound evaluates exactly") {
  BoundReport rep = layered_size_bound(7, 3, {{3, 33}, {4, 33}});
  CHECK(rep.total == Rational(124, 3));
  CHECK(rep.boundary_doubled == 2 * (1 + 7 + 21));
  CHECK(rep.fraction_of_cube == Rational(124, 3 * 128));

  // The middle range must be covered exactly.
  CHECK_THROWS_AS(layered_size_bound(7, 3, {{3, 33}}), std::invalid_argument);
  CHECK_THROWS_AS(layered_size_bound(7, 3, {{3, 33}, {4, 33}, {5, 1}}),
                  std::invalid_argument);

  // No middle layers at all when n < 2d.
  BoundReport small = layered_size_bound(5, 3, {});
  CHECK(small.total == Rational(2 * (1 + 5 + 10), 3));
}

TEST_CASE("product lower bound arithmetic") {
  CHECK(euler_product_lower(3, 1) == Rational(5, 9));
  Rational p20 = euler_product_lower(3, 20);
  CHECK(p20 > Rational(56, 100));
  CHECK(p20 < Rational(561, 1000));
  Rational q2 = euler_product_lower(2, 30);
  CHECK(q2 > Rational(2887, 10000));
  CHECK(q2 < Rational(2889, 10000));
  CHECK_THROWS_AS(euler_product_lower(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(euler_product_lower(3, 0), std::invalid_argument);
}

TEST_CASE("the density constant identity holds") {
  CHECK(density_constant_check());
  CHECK(Rational(56, 100) / 3 == Rational(14, 75));
}
