#include <doctest.h>

#include "visicube/errors.hpp"
#include "visicube/vertex_set.hpp"

using namespace visicube;

TEST_CASE("construction sorts and deduplicates") {
  VertexSet s(4, {12, 3, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<Vertex>{3, 5, 12});
  CHECK(s[0] == 3);
}

TEST_CASE("membership and mutation") {
  VertexSet s(3);
  CHECK(s.empty());
  s.insert(6);
  s.insert(1);
  s.insert(6);  // duplicate, no-op
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(6));
  CHECK_FALSE(s.contains(2));
  s.erase(1);
  s.erase(1);  // absent, no-op
  CHECK(s.members() == std::vector<Vertex>{6});
  s.clear();
  CHECK(s.empty());
}

TEST_CASE("stray coordinate bits are rejected") {
  CHECK_THROWS_AS(VertexSet(3, {8}), DimensionMismatch);
  VertexSet s(3);
  CHECK_THROWS_AS(s.insert(9), DimensionMismatch);
}

TEST_CASE("union requires matching dimensions") {
  VertexSet a(3, {1, 2});
  VertexSet b(3, {2, 4});
  VertexSet u = a.united_with(b);
  CHECK(u.members() == std::vector<Vertex>{1, 2, 4});
  CHECK_THROWS_AS(a.united_with(VertexSet(4, {1})), DimensionMismatch);
}

TEST_CASE("whole cube") {
  VertexSet q = VertexSet::whole_cube(3);
  CHECK(q.size() == 8);
  CHECK(q.contains(0));
  CHECK(q.contains(7));
}

TEST_CASE("equality is by dimension and members") {
  CHECK(VertexSet(3, {1, 2}) == VertexSet(3, {2, 1}));
  CHECK_FALSE(VertexSet(3, {1}) == VertexSet(4, {1}));
}
