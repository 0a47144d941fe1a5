#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zfc/vertex_set.hpp"

namespace zfc {

// n-by-n sparsity pattern of a structured state matrix: each entry is either
// a structural zero or a free parameter (a "star"). Immutable once built.
class PatternMatrix {
 public:
  // All-zero pattern plus stars at the given (row, col) positions.
  PatternMatrix(int n, const std::vector<std::pair<int, int>>& stars);

  // Text form: n rows of n characters from {'0', 'x'}.
  static PatternMatrix from_rows(const std::vector<std::string>& rows);

  int dim() const { return n_; }
  bool star(int row, int col) const { return star_[static_cast<size_t>(row) * n_ + col] != 0; }
  int star_count() const;

  // Vertices i with a star on the diagonal.
  VertexSet diagonal_stars() const;

  std::vector<std::string> to_rows() const;

  bool operator==(const PatternMatrix& other) const {
    return n_ == other.n_ && star_ == other.star_;
  }

 private:
  PatternMatrix(int n, std::vector<uint8_t> star) : n_(n), star_(std::move(star)) {}

  int n_ = 0;
  std::vector<uint8_t> star_;  // row-major

  friend PatternMatrix modified_pattern(const PatternMatrix& a);
  friend PatternMatrix relabel(const PatternMatrix& a, std::span<const int> perm);
};

// Copy of `a` with every zero diagonal entry replaced by a star. Idempotent.
PatternMatrix modified_pattern(const PatternMatrix& a);

// Pattern under the vertex relabeling v -> perm[v] (perm must be a permutation
// of [0, n)): result[perm[i]][perm[j]] = a[i][j].
PatternMatrix relabel(const PatternMatrix& a, std::span<const int> perm);

// Dedicated-input pattern: one column per member of s, a single star per
// column placed at that member's row. Columns are in ascending vertex order.
class InputPattern {
 public:
  InputPattern(const VertexSet& s, int n);

  int rows() const { return n_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  std::span<const int> column_rows() const { return columns_; }

 private:
  int n_;
  std::vector<int> columns_;
};

}  // namespace zfc
