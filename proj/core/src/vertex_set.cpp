#include "visicube/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "visicube/errors.hpp"

namespace visicube {

VertexSet::VertexSet(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("VertexSet: dimension must be in [1, 62], got " +
                                std::to_string(n));
}

VertexSet::VertexSet(int n, std::vector<Vertex> members) : VertexSet(n) {
  Hypercube cube(n);
  for (Vertex v : members) cube.require_valid(v);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members)
    : VertexSet(n, std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  Hypercube(n_).require_valid(v);
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) return;
  members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::united_with(const VertexSet& other) const {
  if (n_ != other.n_)
    throw DimensionMismatch("united_with: n=" + std::to_string(n_) + " vs n=" +
                            std::to_string(other.n_));
  std::vector<Vertex> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  VertexSet out(n_);
  out.members_ = std::move(merged);
  return out;
}

VertexSet VertexSet::whole_cube(int n) {
  VertexSet out(n);
  out.members_.resize(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.members_.size(); ++i)
    out.members_[i] = static_cast<Vertex>(i);
  return out;
}

}  // namespace visicube
