#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "visicube/vertex.hpp"

namespace visicube {

// A finite set of Q_n vertices kept sorted (= colex order) with no
// duplicates.  Sortedness is what makes iteration deterministic and
// membership a binary search, so mutation goes through insert()/erase().
class VertexSet {
public:
  VertexSet() : n_(1) {}
  explicit VertexSet(int n);
  // Accepts members in any order; sorts and deduplicates.
  VertexSet(int n, std::vector<Vertex> members);
  VertexSet(int n, std::initializer_list<Vertex> members);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(Vertex v) const noexcept;
  // No-op when already present.  Throws DimensionMismatch on stray bits.
  void insert(Vertex v);
  // No-op when absent.
  void erase(Vertex v);
  void clear() noexcept { members_.clear(); }

  // Sorted, ascending.  Stable reference until the next mutation.
  const std::vector<Vertex>& members() const noexcept { return members_; }
  Vertex operator[](std::size_t i) const noexcept { return members_[i]; }
  std::vector<Vertex>::const_iterator begin() const noexcept { return members_.begin(); }
  std::vector<Vertex>::const_iterator end() const noexcept { return members_.end(); }

  bool operator==(const VertexSet& other) const noexcept = default;

  // Set union; both operands must share a dimension.
  VertexSet united_with(const VertexSet& other) const;

  // Every vertex of Q_n.
  static VertexSet whole_cube(int n);

private:
  int n_;
  std::vector<Vertex> members_;
};

}  // namespace visicube
