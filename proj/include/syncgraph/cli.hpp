#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Resolves a graph source: a generator spec ("cycle:6", "petersen", ...) or
/// a path to an edge-list file. `add_edges` ("u,v") are applied in order.
Graph load_graph(const std::string& source, const std::vector<std::string>& add_edges = {});

}  // namespace syncgraph::cli
