#include <charconv>
#include <sstream>

#include "syncgraph/error.hpp"
#include "syncgraph/graph.hpp"

namespace syncgraph {

namespace {

// Splits a line into exactly two non-negative integers.
bool read_pair(std::string_view line, long long& a, long long& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
  };
  auto number = [&](std::size_t& i, long long& out) {
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), out);
    if (ec != std::errc{}) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    return true;
  };
  std::size_t i = skip(0);
  if (!number(i, a)) return false;
  const std::size_t gap = i;
  i = skip(i);
  if (i == gap || !number(i, b)) return false;
  return skip(i) == line.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.emplace_back(number, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  long long n = 0;
  long long m = 0;
  if (!read_pair(lines[0].second, n, m) || n < 1 || m < 0) {
    throw ParseError(lines[0].first, "malformed header, expected \"n m\" with n >= 1");
  }
  const auto edge_lines = lines.size() - 1;
  if (static_cast<long long>(edge_lines) != m) {
    const auto where = edge_lines < static_cast<std::size_t>(m) ? lines.back().first : lines[m + 1].first;
    throw ParseError(where, "header declares " + std::to_string(m) + " edges, found " +
                                std::to_string(edge_lines));
  }

  std::vector<std::pair<Node, Node>> pairs;
  pairs.reserve(edge_lines);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    if (!read_pair(lines[i].second, u, v)) throw ParseError(lines[i].first, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lines[i].first, "endpoint out of range");
    if (u == v) throw ParseError(lines[i].first, "self-loop");
    pairs.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
  }
  return Graph::build(static_cast<int>(n), pairs);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count();
  for (const auto& e : g.edges()) out << '\n' << e.u << ' ' << e.v;
  return out.str();
}

}  // namespace syncgraph
