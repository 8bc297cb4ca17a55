#include "syncgraph/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "detail.hpp"
#include "syncgraph/error.hpp"
#include "syncgraph/rng.hpp"
#include "syncgraph/spectra.hpp"

namespace syncgraph {

std::string to_string(StrategyKind k) {
  return k == StrategyKind::degree_homogeneous ? "degree_homogeneous" : "random";
}

StrategyKind parse_strategy(std::string_view text) {
  if (text == "homog" || text == "degree_homogeneous") return StrategyKind::degree_homogeneous;
  if (text == "random") return StrategyKind::random;
  throw InvalidSpec("unknown strategy '" + std::string(text) + "'");
}

namespace {

TrajectoryPoint point_of(const Graph& g, int m_add) {
  const auto rep = sync_report(g);
  return {m_add, rep.r, rep.lambda2, rep.lambdaN};
}

Edge pick_homogeneous(const std::vector<Edge>& candidates, const std::vector<int>& deg, Rng& rng) {
  using Key = std::pair<int, int>;
  auto key = [&](const Edge& e) -> Key {
    return {deg[e.u] + deg[e.v], std::max(deg[e.u], deg[e.v])};
  };
  Key best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  std::vector<Edge> ties;
  for (const auto& e : candidates) {
    const auto k = key(e);
    if (k < best) {
      best = k;
      ties.clear();
    }
    if (k == best) ties.push_back(e);
  }
  return ties[rng.uniform_index(ties.size())];
}

}  // namespace

Trajectory edge_add_trajectory(const Graph& g0, const StrategySpec& strategy, int steps,
                               std::string seed_graph_desc) {
  if (!is_connected(g0)) throw DisconnectedGraph("trajectory seed graph must be connected");
  const auto available = g0.non_edges().size();
  if (steps < 0 || static_cast<std::size_t>(steps) > available) {
    throw InvalidSpec("steps=" + std::to_string(steps) + " but only " + std::to_string(available) +
                      " non-edges available");
  }

  Trajectory t;
  t.seed_graph_desc = std::move(seed_graph_desc);
  t.strategy = strategy;
  t.points.reserve(static_cast<std::size_t>(steps) + 1);

  Rng rng(strategy.seed);
  Graph g = g0;
  auto deg = degree_profile(g).degrees;
  t.points.push_back(point_of(g, 0));
  for (int step = 1; step <= steps; ++step) {
    const auto candidates = g.non_edges();
    const Edge e = strategy.kind == StrategyKind::degree_homogeneous
                       ? pick_homogeneous(candidates, deg, rng)
                       : candidates[rng.uniform_index(candidates.size())];
    g = add_edge(g, e.u, e.v);
    ++deg[e.u];
    ++deg[e.v];
    t.points.push_back(point_of(g, step));
  }
  t.final_graph = std::move(g);
  return t;
}

int steps_to_saturation(const Graph& g, double fraction) {
  const auto target = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(max_edges(g.node_count()))));
  return target > g.edge_count() ? static_cast<int>(target - g.edge_count()) : 0;
}

TrajectoryStats trajectory_stats(const Trajectory& t) {
  const auto& p = t.points;
  if (p.size() < 2) throw InvalidSpec("trajectory statistics need at least two points");
  TrajectoryStats s;
  s.net_gain = p.back().r - p.front().r;
  double peak = p.front().r;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i].r < p[i - 1].r - 1e-12) ++s.n_decreasing_steps;
    peak = std::max(peak, p[i].r);
    s.max_drawdown = std::max(s.max_drawdown, peak - p[i].r);
  }
  return s;
}

std::string trajectory_csv(const Trajectory& t) {
  std::string out = "m_add,r,lambda2,lambdaN\n";
  for (const auto& p : t.points) {
    out += std::to_string(p.m_add) + ',' + detail::exact(p.r) + ',' + detail::exact(p.lambda2) + ',' +
           detail::exact(p.lambdaN) + '\n';
  }
  return out;
}

std::string trajectory_meta(const Trajectory& t) {
  std::ostringstream out;
  out << "seed_graph=" << t.seed_graph_desc << '\n'
      << "strategy=" << to_string(t.strategy.kind) << '\n'
      << "seed=" << t.strategy.seed << '\n'
      << "steps=" << (t.points.empty() ? 0 : t.points.size() - 1) << '\n'
      << "version=" << kToolVersion << '\n';
  return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

void export_csv(const Trajectory& t, const std::filesystem::path& path) {
  write_file(path, trajectory_csv(t));
  auto meta = path;
  meta.replace_extension(".meta");
  write_file(meta, trajectory_meta(t));
}

std::vector<TrajectoryPoint> parse_trajectory_csv(std::string_view text) {
  std::vector<TrajectoryPoint> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::getline(in, line);
  if (line != "m_add,r,lambda2,lambdaN") throw ParseError(1, "unexpected trajectory CSV header");
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    TrajectoryPoint p;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) throw ParseError(number, "expected 4 columns");
    try {
      p.m_add = std::stoi(cells[0]);
      p.r = std::stod(cells[1]);
      p.lambda2 = std::stod(cells[2]);
      p.lambdaN = std::stod(cells[3]);
    } catch (const std::exception&) {
      throw ParseError(number, "bad number");
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace syncgraph
