#include "zfc/pattern.hpp"

#include <stdexcept>

namespace zfc {

namespace {

void check_dim(int n) {
  if (n < 1) throw std::invalid_argument("PatternMatrix: dimension must be >= 1");
}

}  // namespace

PatternMatrix::PatternMatrix(int n, const std::vector<std::pair<int, int>>& stars) : n_(n) {
  check_dim(n);
  star_.assign(static_cast<size_t>(n) * n, 0);
  for (auto [i, j] : stars) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw std::out_of_range("PatternMatrix: star position out of range");
    }
    star_[static_cast<size_t>(i) * n + j] = 1;
  }
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::string>& rows) {
  int n = static_cast<int>(rows.size());
  check_dim(n);
  std::vector<uint8_t> star(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("PatternMatrix: row " + std::to_string(i + 1) +
                                  " has length " + std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      char c = rows[i][j];
      if (c == 'x' || c == 'X') {
        star[static_cast<size_t>(i) * n + j] = 1;
      } else if (c != '0') {
        throw std::invalid_argument("PatternMatrix: invalid character '" + std::string(1, c) +
                                    "' in row " + std::to_string(i + 1));
      }
    }
  }
  return PatternMatrix(n, std::move(star));
}

int PatternMatrix::star_count() const {
  int count = 0;
  for (uint8_t s : star_) count += s;
  return count;
}

VertexSet PatternMatrix::diagonal_stars() const {
  VertexSet loops(n_);
  for (int i = 0; i < n_; ++i) {
    if (star(i, i)) loops.insert(i);
  }
  return loops;
}

std::vector<std::string> PatternMatrix::to_rows() const {
  std::vector<std::string> rows(n_, std::string(n_, '0'));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (star(i, j)) rows[i][j] = 'x';
    }
  }
  return rows;
}

PatternMatrix modified_pattern(const PatternMatrix& a) {
  std::vector<uint8_t> star = a.star_;
  for (int i = 0; i < a.n_; ++i) {
    star[static_cast<size_t>(i) * a.n_ + i] = 1;
  }
  return PatternMatrix(a.n_, std::move(star));
}

PatternMatrix relabel(const PatternMatrix& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.n_) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<uint8_t> star(a.star_.size(), 0);
  for (int i = 0; i < a.n_; ++i) {
    for (int j = 0; j < a.n_; ++j) {
      if (a.star(i, j)) {
        star[static_cast<size_t>(perm[i]) * a.n_ + perm[j]] = 1;
      }
    }
  }
  return PatternMatrix(a.n_, std::move(star));
}

InputPattern::InputPattern(const VertexSet& s, int n) : n_(n) {
  if (s.universe_size() > n) {
    throw std::out_of_range("InputPattern: set member exceeds matrix dimension");
  }
  columns_ = s.sorted_members();
  if (!columns_.empty() && columns_.back() >= n) {
    throw std::out_of_range("InputPattern: set member exceeds matrix dimension");
  }
}

}  // namespace zfc
