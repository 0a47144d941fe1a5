#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "zfc/graph.hpp"
#include "zfc/pattern.hpp"

namespace zfc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list text format: one edge per line as "<src> <dst>" (whitespace
// separated, non-negative decimal ids); lines starting with '#' are comments;
// blank lines are ignored. A self-loop is "<v> <v>".
//
// The vertex count is max id + 1, or n_hint when that is larger. Duplicate
// edges are collapsed; when duplicates_collapsed is non-null it receives the
// number of dropped lines.
LoopDigraph read_edge_list(std::istream& in, std::optional<int> n_hint = std::nullopt,
                           int* duplicates_collapsed = nullptr);
LoopDigraph read_edge_list(const std::string& path, std::optional<int> n_hint = std::nullopt,
                           int* duplicates_collapsed = nullptr);

void write_edge_list(const LoopDigraph& g, std::ostream& out);
void write_edge_list(const LoopDigraph& g, const std::string& path);

// Pattern-matrix text format: n lines of n characters from {'0', 'x'}.
PatternMatrix read_pattern(std::istream& in);
PatternMatrix read_pattern(const std::string& path);

void write_pattern(const PatternMatrix& a, std::ostream& out);
void write_pattern(const PatternMatrix& a, const std::string& path);

}  // namespace zfc
