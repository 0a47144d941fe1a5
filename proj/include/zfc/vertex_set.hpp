#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zfc {

// Subset of the vertex universe [0, n). Membership tests, insertion and
// removal are O(1); the member list is kept unordered so drawing a uniform
// member is O(1) as well. Equality is set equality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : pos_(universe, -1) {}

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe_size() const { return static_cast<int>(pos_.size()); }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool is_full() const { return size() == universe_size(); }

  bool contains(int v) const {
    assert(v >= 0 && v < universe_size());
    return pos_[v] >= 0;
  }

  void insert(int v) {
    assert(v >= 0 && v < universe_size());
    if (pos_[v] >= 0) return;
    pos_[v] = static_cast<int>(members_.size());
    members_.push_back(v);
  }

  void remove(int v) {
    assert(v >= 0 && v < universe_size());
    int p = pos_[v];
    if (p < 0) return;
    int last = members_.back();
    members_[p] = last;
    pos_[last] = p;
    members_.pop_back();
    pos_[v] = -1;
  }

  void clear() {
    for (int v : members_) pos_[v] = -1;
    members_.clear();
  }

  // Unordered view; use sorted_members() for deterministic output.
  std::span<const int> members() const { return members_; }
  std::vector<int> sorted_members() const;

  // v-th member by insertion-order index (used for uniform sampling).
  int member_at(int idx) const { return members_[idx]; }

  bool operator==(const VertexSet& other) const;
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

  // Bitmask encoding; requires universe_size() <= 64.
  uint64_t mask() const;
  static VertexSet from_mask(int universe, uint64_t mask);

 private:
  std::vector<int> members_;
  std::vector<int> pos_;  // pos_[v] = index into members_, or -1
};

}  // namespace zfc
