#include "syncgraph/metrics.hpp"

#include <queue>

#include "syncgraph/error.hpp"

namespace syncgraph {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("metric needs a connected graph");
}

std::vector<int> bfs_distances(const std::vector<std::vector<Node>>& adj, Node s) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<Node> frontier;
  dist[s] = 0;
  frontier.push(s);
  while (!frontier.empty()) {
    const Node x = frontier.front();
    frontier.pop();
    for (Node y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> betweenness(const Graph& g) {
  require_connected(g);
  const auto adj = g.adjacency();
  const auto n = static_cast<std::size_t>(g.node_count());
  std::vector<double> score(n, 0.0);

  std::vector<Node> order;
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<int> dist(n);
  for (Node s = 0; s < static_cast<Node>(n); ++s) {
    order.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;

    std::queue<Node> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Node x = frontier.front();
      frontier.pop();
      order.push_back(x);
      for (Node y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          frontier.push(y);
        }
        if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
      }
    }

    // dependencies in reverse BFS order; predecessors are neighbours one level up
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Node w = *it;
      for (Node v : adj[w]) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }
  return score;
}

DistanceStats distance_stats(const Graph& g) {
  require_connected(g);
  const auto adj = g.adjacency();
  const int n = g.node_count();
  long long total = 0;
  int diameter = 0;
  for (Node s = 0; s < n; ++s) {
    const auto dist = bfs_distances(adj, s);
    for (Node t = s + 1; t < n; ++t) {
      total += dist[t];
      diameter = std::max(diameter, dist[t]);
    }
  }
  const auto pairs = static_cast<double>(max_edges(n));
  return {pairs > 0 ? static_cast<double>(total) / pairs : 0.0, diameter};
}

double degree_homogeneity(const Graph& g) {
  const auto profile = degree_profile(g);
  const double n = g.node_count();
  double mean = 0.0;
  for (int d : profile.degrees) mean += d;
  mean /= n;
  double var = 0.0;
  for (int d : profile.degrees) var += (d - mean) * (d - mean);
  return var / n;
}

double clustering_coefficient(const Graph& g) {
  const auto adj = g.adjacency();
  double sum = 0.0;
  for (const auto& nbrs : adj) {
    const auto k = nbrs.size();
    if (k < 2) continue;
    int links = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) links += g.has_edge(nbrs[i], nbrs[j]) ? 1 : 0;
    sum += 2.0 * links / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / g.node_count();
}

MetricReport metric_report(const Graph& g) {
  const auto d = distance_stats(g);
  return {betweenness(g), d.avg_distance, d.diameter, degree_homogeneity(g), clustering_coefficient(g)};
}

}  // namespace syncgraph
