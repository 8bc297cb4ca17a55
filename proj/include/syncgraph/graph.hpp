#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace syncgraph {

using Node = int;

/// Unordered node pair stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on nodes 0..n-1.
///
/// Immutable value: every mutating operation returns a new Graph. The edge
/// list is kept sorted lexicographically and free of duplicates, so two
/// graphs compare equal iff they have the same node count and edge set.
class Graph {
 public:
  /// Normalizes `pairs` (orders endpoints, drops duplicates).
  /// Throws InvalidSpec for n < 1 and InvalidEdge for self-loops or
  /// out-of-range endpoints.
  static Graph build(int n, std::span<const std::pair<Node, Node>> pairs);
  static Graph build(int n, std::initializer_list<std::pair<Node, Node>> pairs) {
    return build(n, std::span<const std::pair<Node, Node>>(pairs.begin(), pairs.size()));
  }

  int node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Node u, Node v) const;

  /// Neighbour lists, ascending.
  std::vector<std::vector<Node>> adjacency() const;

  /// Pairs {u,v}, u < v, not in the edge set, in lexicographic order.
  std::vector<Edge> non_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 1;
  std::vector<Edge> edges_;
};

/// Maximum number of edges of a simple graph on n nodes.
constexpr std::size_t max_edges(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// ---------------------------------------------------------------------------
// Generators

enum class GeneratorKind { cycle, path, complete, complete_bipartite, petersen, barabasi_albert };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::cycle;
  int n = 0;               // cycle, path, complete, barabasi_albert
  int p = 0;               // complete_bipartite parts
  int q = 0;
  int m_attach = 0;        // barabasi_albert
  std::uint64_t seed = 0;  // barabasi_albert

  static GeneratorSpec cycle(int n) { return {GeneratorKind::cycle, n}; }
  static GeneratorSpec path(int n) { return {GeneratorKind::path, n}; }
  static GeneratorSpec complete(int n) { return {GeneratorKind::complete, n}; }
  static GeneratorSpec complete_bipartite(int p, int q) {
    return {GeneratorKind::complete_bipartite, 0, p, q};
  }
  static GeneratorSpec petersen() { return {GeneratorKind::petersen}; }
  static GeneratorSpec barabasi_albert(int n, int m_attach, std::uint64_t seed) {
    return {GeneratorKind::barabasi_albert, n, 0, 0, m_attach, seed};
  }
};

/// Throws InvalidSpec when the parameters are out of bounds.
Graph generate(const GeneratorSpec& spec);

/// Parses "cycle:6", "path:3", "complete:4", "kbip:2:3", "petersen",
/// "ba:50:2:12345". Throws InvalidSpec on anything else.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

// Shorthands for the common generators.
inline Graph cycle_graph(int n) { return generate(GeneratorSpec::cycle(n)); }
inline Graph path_graph(int n) { return generate(GeneratorSpec::path(n)); }
inline Graph complete_graph(int n) { return generate(GeneratorSpec::complete(n)); }
inline Graph complete_bipartite_graph(int p, int q) {
  return generate(GeneratorSpec::complete_bipartite(p, q));
}
inline Graph petersen_graph() { return generate(GeneratorSpec::petersen()); }

// ---------------------------------------------------------------------------
// Structural operations

enum class EdgeAction { add, remove };

/// Returns a copy of g with {u,v} added or removed.
Graph mutate_edge(const Graph& g, Node u, Node v, EdgeAction action);
inline Graph add_edge(const Graph& g, Node u, Node v) { return mutate_edge(g, u, v, EdgeAction::add); }
inline Graph remove_edge(const Graph& g, Node u, Node v) {
  return mutate_edge(g, u, v, EdgeAction::remove);
}

Graph complement(const Graph& g);

/// Subgraph induced by `nodes`, relabeled 0..k-1 in ascending original order.
/// Throws InvalidSubset for an empty set and InvalidEdge for out-of-range nodes.
Graph induced_subgraph(const Graph& g, std::span<const Node> nodes);

struct Components {
  int count = 0;
  std::vector<int> labels;  // component id per node, numbered by first node
};

Components connectivity(const Graph& g);
inline bool is_connected(const Graph& g) { return connectivity(g).count == 1; }

struct DegreeProfile {
  std::vector<int> degrees;
  int d_min = 0;
  int d_max = 0;
};

DegreeProfile degree_profile(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::optional<std::vector<int>> colors;  // 0/1 per node when bipartite
};

Bipartition is_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" header, then m lines "u v".

/// Throws ParseError (with line number) on malformed input.
Graph parse_edge_list(std::string_view text);

/// Header plus one line per edge in lexicographic order, LF separated,
/// no trailing newline.
std::string serialize_edge_list(const Graph& g);

/// Compact single-line form "0-1;0-3;1-2" used inside CSV cells and reports.
std::string format_edges(const Graph& g);

}  // namespace syncgraph
