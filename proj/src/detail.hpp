#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph::detail {

/// Shortest decimal form with 12 significant digits ("0.25", "4.41421356237").
inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Round-trip exact decimal form.
inline std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Best-graph bookkeeping shared by the samplers and the exhaustive scan.
///
/// Eigenratios are compared on a 1e-10 grid so that relabelings of the same
/// graph (whose r differ in the last bits) tie; ties go to the
/// lexicographically least edge list. The order is total, so the winner does
/// not depend on evaluation order or thread count.
struct Candidate {
  double r = -1.0;
  std::vector<Edge> edges;

  long long key() const { return std::llround(r * 1e10); }

  bool beats(const Candidate& other) const {
    if (key() != other.key()) return key() > other.key();
    return edges < other.edges;
  }
};

}  // namespace syncgraph::detail
