#include "syncgraph/verify.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"
#include "syncgraph/error.hpp"
#include "syncgraph/parallel.hpp"
#include "syncgraph/rng.hpp"

namespace syncgraph {

using detail::num;

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::L1: return "L1";
    case ClaimId::L2: return "L2";
    case ClaimId::L4: return "L4";
    case ClaimId::L5: return "L5";
    case ClaimId::L6: return "L6";
    case ClaimId::T1: return "T1";
    case ClaimId::T2_SAMPLE: return "T2_SAMPLE";
    case ClaimId::SPLIT_COMPL: return "SPLIT_COMPL";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
  }
  return "?";
}

std::string format_report_line(const ClaimReport& r) {
  return to_string(r.claim_id) + '\t' + r.instance + '\t' + to_string(r.verdict) + '\t' + r.witness;
}

namespace {

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.node_count()) + " edges=[" + format_edges(g) + "]";
}

std::string describe(const Graph& g, Edge e) {
  return describe(g) + " +e{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

double scale_of(const Spectrum& s) { return std::max(1.0, s.values.empty() ? 0.0 : s.lambda_max()); }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DisconnectedGraph(std::string(what) + " needs a connected graph");
}

}  // namespace

ClaimReport verify_edge_monotonicity(const Graph& g, Edge e, double tol) {
  const Graph h = add_edge(g, e.u, e.v);
  const auto before = laplacian_spectrum(g, tol);
  const auto after = laplacian_spectrum(h, tol);
  const double slack = tol * scale_of(after);

  ClaimReport rep{ClaimId::L1, describe(g, e)};
  std::size_t worst = 0;
  double worst_drop = -INFINITY;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const double drop = before.values[i] - after.values[i];
    if (drop > worst_drop) {
      worst_drop = drop;
      worst = i;
    }
  }
  rep.verdict = worst_drop <= slack ? Verdict::pass : Verdict::fail;
  rep.witness = "max_drop=" + num(worst_drop) + " at i=" + std::to_string(worst + 1) + " (" +
                num(before.values[worst]) + " -> " + num(after.values[worst]) + "); lambdaN " +
                num(before.lambda_max()) + " -> " + num(after.lambda_max());
  return rep;
}

ClaimReport verify_degree_bounds(const Graph& g, double tol) {
  require_connected(g, "degree bounds");
  ClaimReport rep{ClaimId::L2, describe(g)};
  const int n = g.node_count();
  if (n < 2) {
    rep.verdict = Verdict::skipped;
    rep.witness = "single node";
    return rep;
  }
  const auto s = laplacian_spectrum(g, tol);
  const auto deg = degree_profile(g);
  const double slack = tol * scale_of(s);
  const double lam_n = s.lambda_max();
  const double lam_2 = s.lambda2();

  const bool upper_ok = lam_n >= deg.d_max + 1 - slack;
  const bool equal = std::abs(lam_n - (deg.d_max + 1)) <= kClusterTol * scale_of(s);
  const bool equality_ok = equal == (deg.d_max == n - 1);
  const bool complete = g.edge_count() == max_edges(n);
  const bool lower_ok = complete || lam_2 <= deg.d_min + slack;

  rep.verdict = upper_ok && equality_ok && lower_ok ? Verdict::pass : Verdict::fail;
  rep.witness = "lambdaN=" + num(lam_n) + " d_max+1=" + std::to_string(deg.d_max + 1) +
                (equal ? " (equality)" : "") + "; lambda2=" + num(lam_2) +
                (complete ? " (complete: lambda2 bound n/a)" : " d_min=" + std::to_string(deg.d_min));
  if (!upper_ok) rep.witness += "; VIOLATION lambdaN < d_max+1";
  if (!equality_ok) rep.witness += "; VIOLATION equality iff d_max=n-1";
  if (!lower_ok) rep.witness += "; VIOLATION lambda2 > d_min";
  return rep;
}

ClaimReport verify_lambda2_preservation(const Graph& g, Edge e, double tol) {
  const Graph h = add_edge(g, e.u, e.v);
  require_connected(g, "lambda2 preservation");
  ClaimReport rep{ClaimId::L4, describe(g, e)};

  const auto s = laplacian_spectrum(g, tol);
  const auto before = sync_report(s);
  if (before.mult2 < 2) {
    rep.verdict = Verdict::skipped;
    rep.witness = "lambda2=" + num(before.lambda2) + " is simple";
    return rep;
  }
  const auto after = laplacian_spectrum(h, tol);
  const double shift = std::abs(after.lambda2() - before.lambda2);
  rep.verdict = shift <= tol * scale_of(after) ? Verdict::pass : Verdict::fail;
  rep.witness = "lambda2 " + num(before.lambda2) + " (mult " + std::to_string(before.mult2) + ") -> " +
                num(after.lambda2()) + " shift=" + num(shift);
  return rep;
}

ClaimReport verify_complement_identities(const Graph& g, double tol, double identity_tol) {
  ClaimReport rep{ClaimId::L5, describe(g)};
  const int n = g.node_count();
  const Graph gc = complement(g);
  const auto s = laplacian_spectrum(g, tol);
  const auto sc = laplacian_spectrum(gc, tol);
  const int q = connectivity(gc).count;
  const double lam_n = s.lambda_max();
  const double scale = std::max(1.0, static_cast<double>(n));

  const bool bound_ok = lam_n <= n + tol * scale;
  const bool at_n = std::abs(lam_n - n) <= kClusterTol * scale;
  const bool iff_ok = at_n == (q >= 2);
  const int mult_n = at_n ? eigen_multiplicity(s, n) : 0;
  const bool mult_ok = mult_n == q - 1;

  const auto paired = complement_spectrum(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < paired.size(); ++i) worst = std::max(worst, std::abs(paired.values[i] - sc.values[i]));
  const bool pairing_ok = worst <= identity_tol;

  rep.verdict = bound_ok && iff_ok && mult_ok && pairing_ok ? Verdict::pass : Verdict::fail;
  rep.witness = "lambdaN=" + num(lam_n) + " n=" + std::to_string(n) + " q(complement)=" + std::to_string(q) +
                " mult(n)=" + std::to_string(mult_n) + " pairing_err=" + num(worst);
  if (!bound_ok) rep.witness += "; VIOLATION (i) lambdaN > n";
  if (!iff_ok) rep.witness += "; VIOLATION (ii) lambdaN=n iff complement disconnected";
  if (!mult_ok) rep.witness += "; VIOLATION (iii) mult(n) != q-1";
  if (!pairing_ok) rep.witness += "; VIOLATION (iv) pairing identity";
  return rep;
}

double split_complement_ratio(const Graph& g) {
  require_connected(g, "split-complement ratio");
  const int n = g.node_count();
  const Graph gc = complement(g);
  const auto comps = connectivity(gc);
  if (comps.count < 2) throw NotApplicable("complement is connected");

  double worst = 0.0;
  for (int c = 0; c < comps.count; ++c) {
    std::vector<Node> members;
    for (Node x = 0; x < n; ++x)
      if (comps.labels[x] == c) members.push_back(x);
    const auto part = induced_subgraph(gc, members);
    worst = std::max(worst, laplacian_spectrum(part).lambda_max());
  }
  return (n - worst) / n;
}

std::optional<std::vector<Node>> find_induced_even_cycle(const Graph& g, int max_len) {
  const int n = g.node_count();
  if (max_len < 4 || max_len % 2 != 0) throw InvalidSpec("max_len must be even and >= 4");
  if (n > kMaxEvenCycleNodes) {
    throw DeskScaleExceeded("induced even-cycle search limited to " + std::to_string(kMaxEvenCycleNodes) +
                            " nodes, got " + std::to_string(n));
  }
  max_len = std::min(max_len, n - n % 2);
  if (max_len < 4) return std::nullopt;

  const auto adj = g.adjacency();
  std::vector<Node> chosen;
  std::vector<int> inner_degree(static_cast<std::size_t>(n), 0);
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);

  auto induces_cycle = [&] {
    for (Node x : chosen)
      if (inner_degree[x] != 2) return false;
    // 2-regular; a cycle iff connected
    std::vector<Node> stack{chosen.front()};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[chosen.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Node x = stack.back();
      stack.pop_back();
      for (Node y : adj[x]) {
        if (in_set[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == chosen.size();
  };

  // Depth-first over ascending node lists visits them in lexicographic order,
  // so the first hit is the least. Induced degrees only grow as nodes are
  // added, so any node above degree 2 prunes the branch.
  std::optional<std::vector<Node>> found;
  auto search = [&](auto&& self, Node next) -> void {
    const auto size = static_cast<int>(chosen.size());
    if (size >= 4 && size % 2 == 0 && induces_cycle()) {
      found = chosen;
      return;
    }
    if (size == max_len) return;
    for (Node x = next; x < n && !found; ++x) {
      bool ok = true;
      for (Node y : adj[x]) {
        if (in_set[y] && (inner_degree[y] >= 2)) ok = false;
      }
      int own = 0;
      for (Node y : adj[x]) own += in_set[y];
      if (!ok || own > 2) continue;

      chosen.push_back(x);
      in_set[x] = 1;
      inner_degree[x] = own;
      for (Node y : adj[x])
        if (in_set[y] && y != x) ++inner_degree[y];
      self(self, x + 1);
      for (Node y : adj[x])
        if (in_set[y] && y != x) --inner_degree[y];
      inner_degree[x] = 0;
      in_set[x] = 0;
      chosen.pop_back();
    }
  };
  search(search, 0);
  return found;
}

ClaimReport verify_even_cycle_bound(const Graph& g, double tol) {
  require_connected(g, "even-cycle bound");
  ClaimReport rep{ClaimId::L6, describe(g)};
  const auto deg = degree_profile(g);

  std::vector<Node> top;
  for (Node x = 0; x < g.node_count(); ++x)
    if (deg.degrees[x] == deg.d_max) top.push_back(x);

  const auto k = static_cast<int>(top.size());
  if (k < 4) {
    rep.verdict = Verdict::skipped;
    rep.witness = "only " + std::to_string(k) + " max-degree node(s)";
    return rep;
  }
  if (k > kMaxEvenCycleNodes) {
    rep.verdict = Verdict::skipped;
    rep.witness = std::to_string(k) + " max-degree nodes exceed the even-cycle search limit";
    return rep;
  }

  const auto g1 = induced_subgraph(g, top);
  const auto cyc = find_induced_even_cycle(g1, k - k % 2);
  if (!cyc) {
    rep.verdict = Verdict::skipped;
    rep.witness = "no induced even cycle among max-degree nodes";
    return rep;
  }

  std::string where;
  for (Node x : *cyc) where += (where.empty() ? "" : ",") + std::to_string(top[x]);
  const auto s = laplacian_spectrum(g, tol);
  const double bound = deg.d_max + 2;
  rep.verdict = s.lambda_max() >= bound - tol * scale_of(s) ? Verdict::pass : Verdict::fail;
  rep.witness = "induced C" + std::to_string(cyc->size()) + " on {" + where + "}; lambdaN=" + num(s.lambda_max()) +
                " d_max+2=" + num(bound);
  return rep;
}

std::vector<ClaimReport> verify_cycle_theorem(int n_lo, int n_hi, double tol) {
  if (n_lo < 4) throw InvalidSpec("cycle theorem applies to N >= 4");
  std::vector<ClaimReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Graph c = cycle_graph(n);
    const double r0 = sync_report(c, tol).r;
    for (int len = 2; len <= n / 2; ++len) {
      const double r1 = sync_report(add_edge(c, 0, len), tol).r;
      ClaimReport rep{ClaimId::T1, "N=" + std::to_string(n) + " chord=0-" + std::to_string(len)};
      if (n == 4) {
        rep.verdict = std::abs(r1 - r0) <= tol ? Verdict::pass : Verdict::fail;
      } else {
        rep.verdict = r1 < r0 - kStrictMargin ? Verdict::pass : Verdict::fail;
      }
      rep.witness = "r(C)=" + num(r0) + " r(C+e)=" + num(r1) + " diff=" + num(r1 - r0);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

RatioSample sample_max_ratio(int n, int m, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 2 || m < n - 1 || static_cast<std::size_t>(m) > max_edges(n)) {
    throw InvalidSpec("no connected graph with n=" + std::to_string(n) + " and m=" + std::to_string(m));
  }
  if (samples == 0) throw InvalidSpec("samples must be >= 1");

  std::vector<Edge> all;
  for (Node u = 0; u < n; ++u)
    for (Node v = u + 1; v < n; ++v) all.push_back({u, v});

  constexpr std::uint64_t kBlock = 1000;
  const auto blocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  struct BlockResult {
    detail::Candidate best;
    std::uint64_t draws = 0;
  };
  std::vector<BlockResult> results(blocks);

  parallel_for_blocks(blocks, threads, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    const std::uint64_t quota = std::min(kBlock, samples - b * kBlock);
    auto pool = all;
    auto& out = results[b];
    std::vector<std::pair<Node, Node>> pairs(static_cast<std::size_t>(m));
    for (std::uint64_t got = 0; got < quota;) {
      ++out.draws;
      // partial Fisher-Yates: first m slots become a uniform m-subset
      for (int i = 0; i < m; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.uniform_index(pool.size() - i));
        std::swap(pool[i], pool[j]);
        pairs[i] = {pool[i].u, pool[i].v};
      }
      const Graph g = Graph::build(n, pairs);
      if (!is_connected(g)) continue;
      ++got;
      const detail::Candidate cand{sync_report(laplacian_spectrum(g)).r, g.edges()};
      if (cand.beats(out.best)) out.best = cand;
    }
  });

  RatioSample res{n, m, samples};
  detail::Candidate best;
  for (const auto& r : results) {
    res.draws += r.draws;
    if (r.best.beats(best)) best = r.best;
  }
  res.max_r = best.r;
  std::vector<std::pair<Node, Node>> pairs;
  for (const auto& e : best.edges) pairs.emplace_back(e.u, e.v);
  res.argmax = Graph::build(n, pairs);
  return res;
}

ClaimReport sample_ratio_bound(int n, int m, std::uint64_t samples, std::uint64_t seed, double bound,
                               unsigned threads) {
  const auto res = sample_max_ratio(n, m, samples, seed, threads);
  ClaimReport rep{ClaimId::T2_SAMPLE, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                          " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed)};
  const bool below = res.max_r < bound - 1e-9;
  rep.verdict = below ? Verdict::pass : Verdict::fail;
  rep.witness = std::string("non-exhaustive sampling, not a proof: ") +
                (below ? "no counterexample found" : "COUNTEREXAMPLE to bound") + "; bound=" + num(bound) +
                " max_r=" + num(res.max_r) + " draws=" + std::to_string(res.draws) + " argmax=[" +
                format_edges(res.argmax) + "]";
  return rep;
}

}  // namespace syncgraph
