// Test-only reference implementations. Deliberately naive and independent
// of the library's code paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "syncgraph/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// Cyclic Jacobi rotations until the off-diagonal mass vanishes.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
  std::sort(d.begin(), d.end());
  return d;
}

inline Matrix laplacian(const syncgraph::Graph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  Matrix l(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) {
    l[e.u][e.v] = l[e.v][e.u] = -1.0;
    l[e.u][e.u] += 1.0;
    l[e.v][e.v] += 1.0;
  }
  return l;
}

inline std::vector<double> laplacian_eigenvalues(const syncgraph::Graph& g) {
  return jacobi_eigenvalues(laplacian(g));
}

/// G(n, p) with a std::mt19937_64 stream; independent of syncgraph::Rng.
inline syncgraph::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) pairs.emplace_back(u, v);
  return syncgraph::Graph::build(n, pairs);
}

/// Random connected graph: random tree plus G(n, p) extras.
inline syncgraph::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) pairs.emplace_back(u, v);
  return syncgraph::Graph::build(n, pairs);
}

/// Does the node subset (bitmask) induce a cycle? Checks that some cyclic
/// ordering of the subset uses only edges and that the induced edge count
/// equals the subset size.
inline bool subset_induces_cycle(const syncgraph::Graph& g, std::uint32_t mask) {
  std::vector<int> nodes;
  for (int x = 0; x < g.node_count(); ++x)
    if (mask >> x & 1u) nodes.push_back(x);
  std::size_t induced = 0;
  for (const auto& e : g.edges())
    if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++induced;
  if (induced != nodes.size()) return false;
  // Hamiltonian cycle by permutation with the first node fixed.
  std::vector<int> rest(nodes.begin() + 1, nodes.end());
  do {
    bool ok = g.has_edge(nodes[0], rest.front()) && g.has_edge(rest.back(), nodes[0]);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

/// Lexicographically least ascending node list of even size >= 4 inducing a cycle.
inline std::vector<int> least_induced_even_cycle(const syncgraph::Graph& g, int max_len) {
  std::vector<std::vector<int>> hits;
  const int n = g.node_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 4 || k % 2 || k > max_len || !subset_induces_cycle(g, mask)) continue;
    std::vector<int> nodes;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) nodes.push_back(x);
    hits.push_back(nodes);
  }
  if (hits.empty()) return {};
  return *std::min_element(hits.begin(), hits.end());
}

/// All-pairs BFS distances by Floyd-Warshall.
inline std::vector<std::vector<int>> distances(const syncgraph::Graph& g) {
  const int n = g.node_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace oracle
