#pragma once

#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph {

struct DistanceStats {
  double avg_distance = 0.0;
  int diameter = 0;
};

struct MetricReport {
  std::vector<double> betweenness;
  double avg_distance = 0.0;
  int diameter = 0;
  double degree_variance = 0.0;
  double clustering = 0.0;
};

/// Unnormalized shortest-path betweenness summed over ordered (s, t) pairs,
/// s != v != t, with fractional credit across equal-length geodesics
/// (Brandes accumulation). Every Petersen node scores 6 under this
/// convention. Throws DisconnectedGraph.
std::vector<double> betweenness(const Graph& g);

/// Mean BFS distance over unordered distinct pairs, and the diameter.
/// Throws DisconnectedGraph.
DistanceStats distance_stats(const Graph& g);

/// Population variance of the degree sequence.
double degree_homogeneity(const Graph& g);

/// Average local clustering; nodes of degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

MetricReport metric_report(const Graph& g);

}  // namespace syncgraph
