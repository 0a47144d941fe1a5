#include "zfc/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace zfc {

std::vector<int> VertexSet::sorted_members() const {
  std::vector<int> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool VertexSet::operator==(const VertexSet& other) const {
  if (universe_size() != other.universe_size()) return false;
  if (size() != other.size()) return false;
  for (int v : members_) {
    if (!other.contains(v)) return false;
  }
  return true;
}

uint64_t VertexSet::mask() const {
  if (universe_size() > 64) {
    throw std::length_error("VertexSet::mask: universe exceeds 64 vertices");
  }
  uint64_t m = 0;
  for (int v : members_) m |= uint64_t{1} << v;
  return m;
}

VertexSet VertexSet::from_mask(int universe, uint64_t mask) {
  if (universe > 64) {
    throw std::length_error("VertexSet::from_mask: universe exceeds 64 vertices");
  }
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) {
    if (mask & (uint64_t{1} << v)) s.insert(v);
  }
  return s;
}

}  // namespace zfc
