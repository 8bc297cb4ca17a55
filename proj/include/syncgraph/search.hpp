#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph {

/// Best achievable eigenratio for one edge count.
struct BestRow {
  int m = 0;
  double max_r = 0.0;
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  Graph argmax = Graph::build(1, {});
  std::uint64_t n_connected_graphs = 0;
};

struct BestTable {
  int n = 0;
  std::vector<BestRow> rows;  // ascending m; rows with no connected graph are omitted
};

/// Largest node count the exhaustive scan accepts.
inline constexpr int kMaxScanNodes = 8;

/// Exact maximum of r over all connected labeled graphs on n nodes for each
/// m in [m_lo, m_hi] (clamped to [n-1, n(n-1)/2]). Ties go to the
/// lexicographically least edge list, so the table does not depend on
/// `threads`. Throws DeskScaleExceeded above kMaxScanNodes nodes.
BestTable exhaustive_scan(int n, int m_lo, int m_hi, unsigned threads = 0);
inline BestTable exhaustive_scan(int n, unsigned threads = 0) {
  return exhaustive_scan(n, 0, static_cast<int>(max_edges(n)), threads);
}

/// Adjacent pairs (m, m+1) where max_r(m+1) < max_r(m) - 1e-9.
std::vector<std::pair<int, int>> nonmonotonicity_report(const BestTable& t);

/// "m,max_r,lambda2,lambdaN,argmax_edge_list,count_connected"; the edge list
/// cell uses the "u-v;u-v" form.
std::string best_table_csv(const BestTable& t);

struct AnnealSchedule {
  double t0 = 0.1;
  double cooling = 0.999;  // geometric, applied every iteration
  int iterations = 100000;
  int restarts = 8;
};

struct AnnealResult {
  Graph best_graph = Graph::build(1, {});
  double best_r = 0.0;
  std::string schedule_desc;
  std::uint64_t evaluations = 0;
};

/// Simulated annealing over connected graphs with n nodes and m edges.
///
/// A move removes a random edge and adds a random non-edge; moves that
/// disconnect the graph are rejected before evaluation. Metropolis
/// acceptance on r. Restarts use derived seeds and may run in parallel; the
/// result is the best over restarts (lowest restart index on ties) and does
/// not depend on `threads`. Throws InvalidSpec for infeasible (n, m).
AnnealResult anneal(int n, int m, std::uint64_t seed, const AnnealSchedule& schedule = {}, unsigned threads = 0);

}  // namespace syncgraph
