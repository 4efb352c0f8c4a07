#include "visicube/path.hpp"

#include <algorithm>

namespace visicube {

bool Path::unit_steps() const noexcept {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (dist(vertices[i], vertices[i + 1]) != 1) return false;
  return !vertices.empty();
}

bool Path::simple() const {
  std::vector<Vertex> seen(vertices);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool Path::shortest() const noexcept {
  if (vertices.empty()) return false;
  return unit_steps() &&
         length() == static_cast<std::size_t>(dist(vertices.front(), vertices.back()));
}

bool Path::internally_avoids(const VertexSet& m) const {
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i)
    if (m.contains(vertices[i])) return false;
  return true;
}

Path Path::reversed() const {
  Path out{n, vertices};
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace visicube
