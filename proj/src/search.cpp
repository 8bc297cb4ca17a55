#include "syncgraph/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "syncgraph/error.hpp"
#include "syncgraph/parallel.hpp"
#include "syncgraph/rng.hpp"
#include "syncgraph/spectra.hpp"

namespace syncgraph {

namespace {

struct ScanCell {
  detail::Candidate best;
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  std::uint64_t connected = 0;

  void offer(const ScanCell& other) {
    connected += other.connected;
    if (other.best.beats(best)) {
      best = other.best;
      lambda2 = other.lambda2;
      lambdaN = other.lambdaN;
    }
  }
};

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Graph graph_of(int n, const std::vector<Edge>& edges) {
  std::vector<std::pair<Node, Node>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return Graph::build(n, pairs);
}

}  // namespace

BestTable exhaustive_scan(int n, int m_lo, int m_hi, unsigned threads) {
  if (n < 2) throw InvalidSpec("exhaustive scan needs n >= 2");
  const int total_edges = static_cast<int>(max_edges(n));
  m_lo = std::max(m_lo, n - 1);
  m_hi = std::min(m_hi, total_edges);
  if (n > kMaxScanNodes) {
    double count = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) count += binomial(total_edges, m);
    std::ostringstream msg;
    msg << "refusing to enumerate " << count << " edge subsets for n=" << n << " (limit n <= " << kMaxScanNodes
        << ")";
    throw DeskScaleExceeded(msg.str());
  }
  BestTable table{n, {}};
  if (m_lo > m_hi) return table;

  std::vector<Edge> index;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) index.push_back({u, v});

  const std::uint64_t masks = std::uint64_t{1} << total_edges;
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 16;
  const auto blocks = static_cast<std::size_t>((masks + kBlock - 1) / kBlock);
  const auto span = static_cast<std::size_t>(m_hi - m_lo + 1);
  std::vector<std::vector<ScanCell>> partial(blocks, std::vector<ScanCell>(span));

  parallel_for_blocks(blocks, threads, [&](std::size_t b) {
    auto& cells = partial[b];
    SymmetricMatrix lap(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n));
    const std::uint64_t end = std::min(masks, (b + 1) * kBlock);
    for (std::uint64_t mask = b * kBlock; mask < end; ++mask) {
      const int m = std::popcount(mask);
      if (m < m_lo || m > m_hi) continue;

      std::fill(nbr.begin(), nbr.end(), 0u);
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const auto& e = index[static_cast<std::size_t>(std::countr_zero(bits))];
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
      }
      std::uint32_t seen = 1u;
      std::uint32_t frontier = 1u;
      while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= nbr[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != (1u << n) - 1u) continue;

      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) lap(i, j) = (nbr[i] >> j & 1u) ? -1.0 : 0.0;
        lap(i, i) = std::popcount(nbr[i]);
      }
      const auto values = symmetric_eigenvalues(lap);
      auto& cell = cells[static_cast<std::size_t>(m - m_lo)];
      ++cell.connected;

      detail::Candidate cand{values[1] / values.back(), {}};
      if (cand.key() < cell.best.key()) continue;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        cand.edges.push_back(index[static_cast<std::size_t>(std::countr_zero(bits))]);
      }
      if (cand.beats(cell.best)) {
        cell.best = std::move(cand);
        cell.lambda2 = values[1];
        cell.lambdaN = values.back();
      }
    }
  });

  std::vector<ScanCell> merged(span);
  for (const auto& cells : partial)
    for (std::size_t i = 0; i < span; ++i) merged[i].offer(cells[i]);

  for (std::size_t i = 0; i < span; ++i) {
    const auto& c = merged[i];
    if (c.connected == 0) continue;
    table.rows.push_back(
        {m_lo + static_cast<int>(i), c.best.r, c.lambda2, c.lambdaN, graph_of(n, c.best.edges), c.connected});
  }
  return table;
}

std::vector<std::pair<int, int>> nonmonotonicity_report(const BestTable& t) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
    const auto& a = t.rows[i];
    const auto& b = t.rows[i + 1];
    if (b.m == a.m + 1 && b.max_r < a.max_r - 1e-9) out.emplace_back(a.m, b.m);
  }
  return out;
}

std::string best_table_csv(const BestTable& t) {
  std::string out = "m,max_r,lambda2,lambdaN,argmax_edge_list,count_connected\n";
  for (const auto& row : t.rows) {
    out += std::to_string(row.m) + ',' + detail::exact(row.max_r) + ',' + detail::exact(row.lambda2) + ',' +
           detail::exact(row.lambdaN) + ',' + format_edges(row.argmax) + ',' +
           std::to_string(row.n_connected_graphs) + '\n';
  }
  return out;
}

namespace {

// Mutable working state for one annealing run.
class AnnealState {
 public:
  AnnealState(int n, int m, Rng& rng) : n_(n), adj_(static_cast<std::size_t>(n * n), 0) {
    // random spanning tree, then uniform extra edges
    std::vector<Node> order(static_cast<std::size_t>(n));
    for (Node i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform_index(i)]);
    for (std::size_t i = 1; i < order.size(); ++i) set(order[i], order[rng.uniform_index(i)], true);
    while (edges_.size() < static_cast<std::size_t>(m)) {
      const auto pool = non_edges();
      const auto& e = pool[rng.uniform_index(pool.size())];
      set(e.u, e.v, true);
    }
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (Node u = 0; u < n_; ++u)
      for (Node v = u + 1; v < n_; ++v)
        if (!at(u, v)) out.push_back({u, v});
    return out;
  }

  const std::vector<Edge>& edges() const { return edges_; }

  void set(Node u, Node v, bool on) {
    if (u > v) std::swap(u, v);
    adj_[u * n_ + v] = adj_[v * n_ + u] = on ? 1 : 0;
    if (on) {
      edges_.push_back({u, v});
    } else {
      edges_.erase(std::find(edges_.begin(), edges_.end(), Edge{u, v}));
    }
  }

  bool connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const Node x = stack.back();
      stack.pop_back();
      for (Node y = 0; y < n_; ++y) {
        if (at(x, y) && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n_;
  }

  double ratio() const {
    SymmetricMatrix lap(static_cast<std::size_t>(n_));
    for (Node i = 0; i < n_; ++i) {
      int d = 0;
      for (Node j = 0; j < n_; ++j) {
        if (at(i, j)) {
          lap(i, j) = -1.0;
          ++d;
        }
      }
      lap(i, i) = d;
    }
    const auto v = symmetric_eigenvalues(lap);
    return v[1] / v.back();
  }

  Graph graph() const { return graph_of(n_, sorted_edges()); }

  std::vector<Edge> sorted_edges() const {
    auto e = edges_;
    std::sort(e.begin(), e.end());
    return e;
  }

 private:
  bool at(Node u, Node v) const { return adj_[u * n_ + v] != 0; }

  int n_;
  std::vector<char> adj_;
  std::vector<Edge> edges_;
};

struct RunResult {
  detail::Candidate best;
  std::uint64_t evaluations = 0;
};

RunResult anneal_once(int n, int m, std::uint64_t seed, const AnnealSchedule& schedule) {
  Rng rng(seed);
  AnnealState state(n, m, rng);
  RunResult res;
  double current = state.ratio();
  res.evaluations = 1;
  res.best = {current, state.sorted_edges()};

  double temperature = schedule.t0;
  for (int it = 0; it < schedule.iterations; ++it, temperature *= schedule.cooling) {
    const auto holes = state.non_edges();
    if (holes.empty() || state.edges().empty()) break;
    const Edge out = state.edges()[rng.uniform_index(state.edges().size())];
    const Edge in = holes[rng.uniform_index(holes.size())];
    state.set(out.u, out.v, false);
    state.set(in.u, in.v, true);
    if (!state.connected()) {
      state.set(in.u, in.v, false);
      state.set(out.u, out.v, true);
      continue;
    }

    const double proposed = state.ratio();
    ++res.evaluations;
    const double delta = proposed - current;
    const bool accept = delta >= 0.0 || (temperature > 0.0 && rng.uniform_real() < std::exp(delta / temperature));
    if (!accept) {
      state.set(in.u, in.v, false);
      state.set(out.u, out.v, true);
      continue;
    }
    current = proposed;
    if (detail::Candidate cand{current, state.sorted_edges()}; cand.beats(res.best)) res.best = std::move(cand);
  }
  return res;
}

}  // namespace

AnnealResult anneal(int n, int m, std::uint64_t seed, const AnnealSchedule& schedule, unsigned threads) {
  if (n < 2 || m < n - 1 || static_cast<std::size_t>(m) > max_edges(n)) {
    throw InvalidSpec("no connected graph with n=" + std::to_string(n) + " and m=" + std::to_string(m));
  }
  if (schedule.restarts < 1 || schedule.iterations < 0 || schedule.t0 < 0.0 || schedule.cooling <= 0.0 ||
      schedule.cooling > 1.0) {
    throw InvalidSpec("invalid annealing schedule");
  }

  std::vector<RunResult> runs(static_cast<std::size_t>(schedule.restarts));
  parallel_for_blocks(runs.size(), threads,
                      [&](std::size_t k) { runs[k] = anneal_once(n, m, derive_seed(seed, k), schedule); });

  AnnealResult out;
  std::size_t winner = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    out.evaluations += runs[k].evaluations;
    if (runs[k].best.key() > runs[winner].best.key()) winner = k;
  }
  out.best_r = runs[winner].best.r;
  out.best_graph = graph_of(n, runs[winner].best.edges);
  std::ostringstream desc;
  desc << "T0=" << schedule.t0 << " cooling=" << schedule.cooling << " iterations=" << schedule.iterations
       << " restarts=" << schedule.restarts << " seed=" << seed;
  out.schedule_desc = desc.str();
  return out;
}

}  // namespace syncgraph
