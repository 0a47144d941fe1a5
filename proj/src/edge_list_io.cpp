#include "zfc/edge_list_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace zfc {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

std::ofstream create_or_throw(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  return out;
}

[[noreturn]] void fail_line(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LoopDigraph read_edge_list(std::istream& in, std::optional<int> n_hint,
                           int* duplicates_collapsed) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long src = 0, dst = 0;
    if (!(ls >> src >> dst)) fail_line(line_no, "expected \"<src> <dst>\"");
    std::string trailing;
    if (ls >> trailing) fail_line(line_no, "unexpected trailing token \"" + trailing + "\"");
    if (src < 0 || dst < 0) fail_line(line_no, "negative vertex id");
    max_id = std::max(max_id, static_cast<int>(std::max(src, dst)));
    edges.emplace_back(static_cast<int>(src), static_cast<int>(dst));
  }
  int n = max_id + 1;
  if (n_hint && *n_hint > n) n = *n_hint;

  int raw_count = static_cast<int>(edges.size());
  LoopDigraph g(n, std::move(edges));
  if (duplicates_collapsed) *duplicates_collapsed = raw_count - g.edge_count();
  return g;
}

LoopDigraph read_edge_list(const std::string& path, std::optional<int> n_hint,
                           int* duplicates_collapsed) {
  std::ifstream in = open_or_throw(path);
  try {
    return read_edge_list(in, n_hint, duplicates_collapsed);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(const LoopDigraph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const LoopDigraph& g, const std::string& path) {
  std::ofstream out = create_or_throw(path);
  write_edge_list(g, out);
}

PatternMatrix read_pattern(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("empty pattern-matrix file");
  try {
    return PatternMatrix::from_rows(rows);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

PatternMatrix read_pattern(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  try {
    return read_pattern(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_pattern(const PatternMatrix& a, std::ostream& out) {
  for (const std::string& row : a.to_rows()) out << row << '\n';
}

void write_pattern(const PatternMatrix& a, const std::string& path) {
  std::ofstream out = create_or_throw(path);
  write_pattern(a, out);
}

}  // namespace zfc
