#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syncgraph/graph.hpp"
#include "syncgraph/spectra.hpp"

namespace syncgraph {

enum class ClaimId { L1, L2, L4, L5, L6, T1, T2_SAMPLE, SPLIT_COMPL };

enum class Verdict { pass, fail, skipped };

std::string to_string(ClaimId id);
std::string to_string(Verdict v);

/// One checked instance of a claim. A skipped instance did not meet the
/// claim's premise and counts as passing; a failing one names the violated
/// quantity in `witness`.
struct ClaimReport {
  ClaimId claim_id = ClaimId::L1;
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::string witness;

  bool passed() const noexcept { return verdict != Verdict::fail; }
};

/// "claim_id<TAB>instance<TAB>PASS|FAIL|SKIPPED<TAB>witness"
std::string format_report_line(const ClaimReport& r);

/// Edge addition never lowers any Laplacian eigenvalue.
/// Throws EdgeExists when e is already an edge.
ClaimReport verify_edge_monotonicity(const Graph& g, Edge e, double tol = kSolverTol);

/// lambda_N >= d_max + 1 (equality iff d_max = n - 1) and, for non-complete
/// graphs, lambda2 <= d_min.
ClaimReport verify_degree_bounds(const Graph& g, double tol = kSolverTol);

/// A repeated lambda2 survives the addition of e. Skipped when lambda2 is
/// simple. Throws EdgeExists.
ClaimReport verify_lambda2_preservation(const Graph& g, Edge e, double tol = kSolverTol);

/// lambda_N <= n; lambda_N = n iff the complement is disconnected; the
/// multiplicity of n equals components(complement) - 1; and the pairing
/// lambda_i(G^c) + lambda_{N-i+2}(G) = N elementwise within identity_tol.
ClaimReport verify_complement_identities(const Graph& g, double tol = kSolverTol,
                                         double identity_tol = 1e-6);

/// r(G) = (N - max_i lambda_max(G_i)) / N where G_i are the components of
/// the complement. Throws NotApplicable when the complement is connected
/// and DisconnectedGraph when g is.
double split_complement_ratio(const Graph& g);

/// Lexicographically least ascending node list of even size in [4, max_len]
/// that induces a cycle. Exhaustive over node subsets; throws
/// DeskScaleExceeded above kMaxEvenCycleNodes nodes.
inline constexpr int kMaxEvenCycleNodes = 20;
std::optional<std::vector<Node>> find_induced_even_cycle(const Graph& g, int max_len);

/// When the subgraph induced by all maximum-degree nodes contains an induced
/// even cycle, lambda_N >= d_max + 2. Skipped otherwise.
ClaimReport verify_even_cycle_bound(const Graph& g, double tol = kSolverTol);

/// Cycle-plus-chord check for every N in [n_lo, n_hi] (N >= 4) and every
/// chord length 2..N/2: r(C_N + e) < r(C_N) for N >= 5, equality for N = 4.
std::vector<ClaimReport> verify_cycle_theorem(int n_lo, int n_hi, double tol = kSolverTol);

/// Margin for strict eigenratio decreases.
inline constexpr double kStrictMargin = 1e-12;

/// Outcome of a randomized search for a graph beating an eigenratio bound.
struct RatioSample {
  int n = 0;
  int m = 0;
  std::uint64_t samples = 0;  // connected graphs evaluated
  std::uint64_t draws = 0;    // including rejected disconnected draws
  double max_r = 0.0;
  Graph argmax = Graph::build(1, {});
};

/// Draws `samples` uniform connected labeled graphs with n nodes and m edges
/// (rejection on connectivity, derived RNG stream per block of draws) and
/// records the best eigenratio. Output is independent of `threads`.
/// Throws InvalidSpec when m < n - 1 or m > n(n-1)/2.
RatioSample sample_max_ratio(int n, int m, std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

/// Falsification-style check that every sampled graph has r < bound - 1e-9.
/// The report states that it is not a proof.
ClaimReport sample_ratio_bound(int n, int m, std::uint64_t samples, std::uint64_t seed,
                               double bound = 0.4, unsigned threads = 0);

}  // namespace syncgraph
