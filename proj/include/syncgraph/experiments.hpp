#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph {

enum class StrategyKind { degree_homogeneous, random };

struct StrategySpec {
  StrategyKind kind = StrategyKind::random;
  std::uint64_t seed = 0;
};

std::string to_string(StrategyKind k);
/// Accepts "homog" / "degree_homogeneous" and "random".
StrategyKind parse_strategy(std::string_view text);

struct TrajectoryPoint {
  int m_add = 0;
  double r = 0.0;
  double lambda2 = 0.0;
  double lambdaN = 0.0;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;  // points[0] is the seed graph
  std::string seed_graph_desc;
  StrategySpec strategy;
  Graph final_graph = Graph::build(1, {});
};

/// Adds `steps` non-edges one at a time, recording the eigenratio after each.
///
/// degree_homogeneous picks the non-edge with the smallest
/// (deg u + deg v, max(deg u, deg v)), breaking ties uniformly with the
/// seeded RNG; random picks uniformly among all non-edges. Throws
/// DisconnectedGraph for a disconnected seed and InvalidSpec when steps
/// exceeds the number of non-edges.
Trajectory edge_add_trajectory(const Graph& g0, const StrategySpec& strategy, int steps,
                               std::string seed_graph_desc = {});

/// Number of additions that brings g to at least `fraction` of the complete
/// graph's edge count.
int steps_to_saturation(const Graph& g, double fraction);

struct TrajectoryStats {
  double net_gain = 0.0;
  int n_decreasing_steps = 0;
  double max_drawdown = 0.0;
};

/// Decreases smaller than 1e-12 are treated as round-off and not counted.
/// Throws InvalidSpec for fewer than two points.
TrajectoryStats trajectory_stats(const Trajectory& t);

/// "m_add,r,lambda2,lambdaN" header, one row per point, 17 significant
/// digits, LF endings.
std::string trajectory_csv(const Trajectory& t);

/// seed graph, strategy, seed and tool version, one "key=value" per line.
std::string trajectory_meta(const Trajectory& t);

/// Writes the CSV to `path` and the metadata to `path` with extension
/// ".meta". Throws IoError.
void export_csv(const Trajectory& t, const std::filesystem::path& path);

/// Parses a CSV written by trajectory_csv back into points.
std::vector<TrajectoryPoint> parse_trajectory_csv(std::string_view text);

inline constexpr const char* kToolVersion = "syncgraph 0.1.0";

}  // namespace syncgraph
