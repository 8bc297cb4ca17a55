#include "syncgraph/graph.hpp"

#include <algorithm>
#include <queue>

#include "syncgraph/error.hpp"

namespace syncgraph {

namespace {

void check_node(int n, Node x) {
  if (x < 0 || x >= n) {
    throw InvalidEdge("node " + std::to_string(x) + " out of range [0, " + std::to_string(n) + ")");
  }
}

Edge normalized(int n, Node u, Node v) {
  check_node(n, u);
  check_node(n, v);
  if (u == v) throw InvalidEdge("self-loop at node " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace

Graph Graph::build(int n, std::span<const std::pair<Node, Node>> pairs) {
  if (n < 1) throw InvalidSpec("graph needs at least one node");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back(normalized(n, u, v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(Node u, Node v) const {
  if (u == v) return false;
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<Node>> Graph::adjacency() const {
  std::vector<std::vector<Node>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  out.reserve(max_edges(n_) - edges_.size());
  auto it = edges_.begin();
  for (Node u = 0; u < n_; ++u) {
    for (Node v = u + 1; v < n_; ++v) {
      if (it != edges_.end() && it->u == u && it->v == v) {
        ++it;
      } else {
        out.push_back({u, v});
      }
    }
  }
  return out;
}

Graph mutate_edge(const Graph& g, Node u, Node v, EdgeAction action) {
  const Edge e = normalized(g.node_count(), u, v);
  std::vector<std::pair<Node, Node>> pairs;
  pairs.reserve(g.edge_count() + 1);
  const bool present = g.has_edge(u, v);
  if (action == EdgeAction::add) {
    if (present) {
      throw EdgeExists("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
    }
    for (const auto& x : g.edges()) pairs.emplace_back(x.u, x.v);
    pairs.emplace_back(e.u, e.v);
  } else {
    if (!present) {
      throw EdgeMissing("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not present");
    }
    for (const auto& x : g.edges()) {
      if (x != e) pairs.emplace_back(x.u, x.v);
    }
  }
  return Graph::build(g.node_count(), pairs);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<Node, Node>> pairs;
  for (const auto& e : g.non_edges()) pairs.emplace_back(e.u, e.v);
  return Graph::build(g.node_count(), pairs);
}

Graph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  if (nodes.empty()) throw InvalidSubset("induced subgraph needs a nonempty node set");
  std::vector<Node> sorted(nodes.begin(), nodes.end());
  for (Node x : sorted) check_node(g.node_count(), x);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> relabel(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) relabel[sorted[i]] = static_cast<int>(i);

  std::vector<std::pair<Node, Node>> pairs;
  for (const auto& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) pairs.emplace_back(relabel[e.u], relabel[e.v]);
  }
  return Graph::build(static_cast<int>(sorted.size()), pairs);
}

Components connectivity(const Graph& g) {
  const auto adj = g.adjacency();
  Components c;
  c.labels.assign(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<Node> frontier;
  for (Node s = 0; s < g.node_count(); ++s) {
    if (c.labels[s] >= 0) continue;
    c.labels[s] = c.count;
    frontier.push(s);
    while (!frontier.empty()) {
      const Node x = frontier.front();
      frontier.pop();
      for (Node y : adj[x]) {
        if (c.labels[y] < 0) {
          c.labels[y] = c.count;
          frontier.push(y);
        }
      }
    }
    ++c.count;
  }
  return c;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(g.node_count()), 0);
  for (const auto& e : g.edges()) {
    ++p.degrees[e.u];
    ++p.degrees[e.v];
  }
  const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.d_min = *lo;
  p.d_max = *hi;
  return p;
}

Bipartition is_bipartite(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> color(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<Node> frontier;
  for (Node s = 0; s < g.node_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Node x = frontier.front();
      frontier.pop();
      for (Node y : adj[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          frontier.push(y);
        } else if (color[y] == color[x]) {
          return {};
        }
      }
    }
  }
  return {true, std::move(color)};
}

std::string format_edges(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ';';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

}  // namespace syncgraph
