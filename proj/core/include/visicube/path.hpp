#pragma once

#include <cstddef>
#include <vector>

#include "visicube/vertex.hpp"
#include "visicube/vertex_set.hpp"

namespace visicube {

// A walk in Q_n given by its vertex sequence.  The predicates below are
// the checks certificates are graded on; none of them assume the walk is
// well-formed, so they can validate untrusted input.
struct Path {
  int n = 1;
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept {  // edge count
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  // Consecutive vertices differ in exactly one coordinate.
  bool unit_steps() const noexcept;
  // No vertex repeats.
  bool simple() const;
  // Unit steps and length == dist(endpoints): a shortest path.
  bool shortest() const noexcept;
  // No vertex strictly between the endpoints belongs to m.
  bool internally_avoids(const VertexSet& m) const;

  Path reversed() const;
};

}  // namespace visicube
