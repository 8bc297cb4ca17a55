#include "syncgraph/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "detail.hpp"
#include "syncgraph/error.hpp"
#include "syncgraph/experiments.hpp"
#include "syncgraph/metrics.hpp"
#include "syncgraph/search.hpp"
#include "syncgraph/spectra.hpp"
#include "syncgraph/verify.hpp"

namespace syncgraph::cli {

using detail::num;

namespace {

bool is_generator_name(const std::string& source) {
  const auto head = source.substr(0, source.find(':'));
  return head == "cycle" || head == "path" || head == "complete" || head == "kbip" || head == "petersen" ||
         head == "ba";
}

std::pair<int, int> parse_pair(const std::string& text, char sep, const std::string& what) {
  const auto at = text.find(sep);
  try {
    if (at == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const auto a_text = text.substr(0, at);
    const auto b_text = text.substr(at + 1);
    const int a = std::stoi(a_text, &used_a);
    const int b = std::stoi(b_text, &used_b);
    if (used_a != a_text.size() || used_b != b_text.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw InvalidSpec("bad " + what + " '" + text + "'");
  }
}

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto [a, b] = parse_pair(text + "," + text, ',', "--n");
    return {a, b};
  }
  return parse_pair(text.substr(0, dots) + "," + text.substr(dots + 2), ',', "--n range");
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoError("write to '" + path + "' failed");
}

struct Globals {
  std::string out_path;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double tol = kSolverTol;
  std::vector<std::string> add_edges;
};

// Report lines for a verify invocation; returns true when nothing failed.
bool emit_reports(const std::vector<ClaimReport>& reports, const Globals& g, std::ostream& out) {
  std::string text;
  bool ok = true;
  for (const auto& r : reports) {
    text += format_report_line(r) + '\n';
    ok = ok && r.passed();
  }
  out << text;
  if (!g.out_path.empty()) write_text(g.out_path, text);
  return ok;
}

std::vector<Edge> edges_to_check(const Graph& graph, const std::string& edge_text) {
  if (edge_text.empty()) return graph.non_edges();
  const auto [u, v] = parse_pair(edge_text, ',', "edge");
  return {{u, v}};
}

ClaimReport split_report(const Graph& graph, double tol) {
  ClaimReport rep{ClaimId::SPLIT_COMPL, "n=" + std::to_string(graph.node_count()) + " edges=[" +
                                            format_edges(graph) + "]"};
  try {
    const double split = split_complement_ratio(graph);
    const double direct = sync_report(graph, tol).r;
    rep.verdict = std::abs(split - direct) <= 1e-6 ? Verdict::pass : Verdict::fail;
    rep.witness = "r_split=" + num(split) + " r_spectrum=" + num(direct);
  } catch (const NotApplicable& e) {
    rep.verdict = Verdict::skipped;
    rep.witness = e.what();
  }
  return rep;
}

}  // namespace

Graph load_graph(const std::string& source, const std::vector<std::string>& add_edges) {
  Graph g = Graph::build(1, {});
  if (is_generator_name(source)) {
    g = generate(parse_generator_spec(source));
  } else {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw IoError("cannot read graph source '" + source + "'");
    std::ostringstream text;
    text << f.rdbuf();
    g = parse_edge_list(text.str());
  }
  for (const auto& e : add_edges) {
    const auto [u, v] = parse_pair(e, ',', "--add-edge");
    g = add_edge(g, u, v);
  }
  return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian eigenratio (synchronizability) toolkit", "syncgraph"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Globals g;
  app.add_option("--out", g.out_path, "Write the main result to this file");
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--threads", g.threads, "Worker cap (0 = all cores)");
  app.add_option("--tol", g.tol, "Solver tolerance");
  app.add_option("--add-edge", g.add_edges, "Add edge u,v to the source graph (repeatable)");

  std::string source;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the Laplacian spectrum");
  spectrum_cmd->add_option("graph", source, "Generator spec or edge-list file")->required();

  auto* ratio_cmd = app.add_subcommand("ratio", "Print r = lambda2 / lambdaN");
  ratio_cmd->add_option("graph", source, "Generator spec or edge-list file")->required();

  auto* complement_cmd = app.add_subcommand("complement", "Print the complement as an edge list");
  complement_cmd->add_option("graph", source, "Generator spec or edge-list file")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Betweenness, distances, degree variance, clustering");
  metrics_cmd->add_option("graph", source, "Generator spec or edge-list file")->required();

  std::string claim;
  std::string n_text;
  std::string edge_text;
  int sample_m = 16;
  std::uint64_t samples = 100000;
  double bound = 0.4;
  auto* verify_cmd = app.add_subcommand("verify", "Check a lemma or theorem");
  verify_cmd->add_option("claim", claim, "theorem1|theorem2|lemma1|lemma2|lemma4|lemma5|lemma6|split|all")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma1", "lemma2", "lemma4", "lemma5", "lemma6", "split", "all"}));
  verify_cmd->add_option("graph", source, "Graph for the per-graph claims");
  verify_cmd->add_option("--n", n_text, "theorem1: cycle sizes A..B; theorem2: node count");
  verify_cmd->add_option("--m", sample_m, "theorem2: edge count");
  verify_cmd->add_option("--samples", samples, "theorem2: number of connected samples");
  verify_cmd->add_option("--bound", bound, "theorem2: eigenratio bound");
  verify_cmd->add_option("--edge", edge_text, "lemma1/lemma4: edge u,v to add (default: every non-edge)");

  std::string strategy = "random";
  int steps = -1;
  double saturation = 0.0;
  auto* traj_cmd = app.add_subcommand("trajectory", "Edge-addition trajectory as CSV");
  traj_cmd->add_option("graph", source, "Generator spec or edge-list file")->required();
  traj_cmd->add_option("--strategy", strategy, "homog|random")->check(CLI::IsMember({"homog", "random"}));
  traj_cmd->add_option("--steps", steps, "Edges to add (default: up to saturation)");
  traj_cmd->add_option("--saturation", saturation, "Stop at this fraction of the complete graph's edges");

  int scan_n = 5;
  int m_min = 0;
  int m_max = 1 << 20;
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive best-r table for small n");
  scan_cmd->add_option("--n", scan_n, "Node count")->required();
  scan_cmd->add_option("--m-min", m_min, "Smallest edge count");
  scan_cmd->add_option("--m-max", m_max, "Largest edge count");

  int anneal_n = 10;
  int anneal_m = 15;
  AnnealSchedule schedule;
  auto* anneal_cmd = app.add_subcommand("anneal", "Simulated annealing for the best r at fixed n, m");
  anneal_cmd->add_option("--n", anneal_n, "Node count")->required();
  anneal_cmd->add_option("--m", anneal_m, "Edge count")->required();
  anneal_cmd->add_option("--t0", schedule.t0, "Initial temperature");
  anneal_cmd->add_option("--cooling", schedule.cooling, "Geometric cooling factor per iteration");
  anneal_cmd->add_option("--iters", schedule.iterations, "Iterations per restart");
  anneal_cmd->add_option("--restarts", schedule.restarts, "Independent restarts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (spectrum_cmd->parsed()) {
      const auto graph = load_graph(source, g.add_edges);
      const auto s = laplacian_spectrum(graph, g.tol);
      std::ostringstream text;
      for (std::size_t i = 0; i < s.size(); ++i) text << "lambda" << i + 1 << '=' << num(s.values[i]) << '\n';
      out << text.str();
      if (!g.out_path.empty()) write_text(g.out_path, text.str());
      return kOk;
    }

    if (ratio_cmd->parsed()) {
      const auto graph = load_graph(source, g.add_edges);
      const auto rep = sync_report(graph, g.tol);
      std::ostringstream text;
      text << "r=" << num(rep.r) << " lambda2=" << num(rep.lambda2) << " lambdaN=" << num(rep.lambdaN) << '\n'
           << "mult2=" << rep.mult2 << " multN=" << rep.multN << '\n';
      out << text.str();
      if (!g.out_path.empty()) write_text(g.out_path, text.str());
      return kOk;
    }

    if (complement_cmd->parsed()) {
      const auto text = serialize_edge_list(complement(load_graph(source, g.add_edges))) + '\n';
      if (g.out_path.empty()) {
        out << text;
      } else {
        write_text(g.out_path, text);
      }
      return kOk;
    }

    if (metrics_cmd->parsed()) {
      const auto rep = metric_report(load_graph(source, g.add_edges));
      std::ostringstream text;
      text << "avg_distance=" << num(rep.avg_distance) << '\n'
           << "diameter=" << rep.diameter << '\n'
           << "degree_variance=" << num(rep.degree_variance) << '\n'
           << "clustering=" << num(rep.clustering) << '\n';
      for (std::size_t i = 0; i < rep.betweenness.size(); ++i) {
        text << "betweenness[" << i << "]=" << num(rep.betweenness[i]) << '\n';
      }
      out << text.str();
      if (!g.out_path.empty()) write_text(g.out_path, text.str());
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<ClaimReport> reports;
      if (claim == "theorem1") {
        const auto [lo, hi] = parse_range(n_text.empty() ? "4..40" : n_text);
        reports = verify_cycle_theorem(lo, hi, g.tol);
      } else if (claim == "theorem2") {
        const int n = n_text.empty() ? 10 : parse_range(n_text).first;
        reports.push_back(sample_ratio_bound(n, sample_m, samples, g.seed, bound, g.threads));
      } else {
        if (source.empty()) throw InvalidSpec("verify " + claim + " needs a graph source");
        const auto graph = load_graph(source, g.add_edges);
        const bool all = claim == "all";
        if (all || claim == "lemma1")
          for (const auto& e : edges_to_check(graph, edge_text))
            reports.push_back(verify_edge_monotonicity(graph, e, g.tol));
        if (all || claim == "lemma2") reports.push_back(verify_degree_bounds(graph, g.tol));
        if (all || claim == "lemma4")
          for (const auto& e : edges_to_check(graph, edge_text))
            reports.push_back(verify_lambda2_preservation(graph, e, g.tol));
        if (all || claim == "lemma5") reports.push_back(verify_complement_identities(graph, g.tol));
        if (all || claim == "lemma6") reports.push_back(verify_even_cycle_bound(graph, g.tol));
        if (all || claim == "split") reports.push_back(split_report(graph, g.tol));
      }
      return emit_reports(reports, g, out) ? kOk : kVerificationFailed;
    }

    if (traj_cmd->parsed()) {
      const auto graph = load_graph(source, g.add_edges);
      if (steps < 0) {
        steps = saturation > 0.0 ? steps_to_saturation(graph, saturation)
                                 : static_cast<int>(graph.non_edges().size());
      }
      std::string desc = source;
      for (const auto& e : g.add_edges) desc += " +" + e;
      const auto t = edge_add_trajectory(graph, {parse_strategy(strategy), g.seed}, steps, desc);
      if (g.out_path.empty()) {
        out << trajectory_csv(t);
      } else {
        export_csv(t, g.out_path);
        if (t.points.size() >= 2) {
          const auto st = trajectory_stats(t);
          out << "points=" << t.points.size() << " r_initial=" << num(t.points.front().r)
              << " r_final=" << num(t.points.back().r) << " net_gain=" << num(st.net_gain)
              << " decreasing_steps=" << st.n_decreasing_steps << " max_drawdown=" << num(st.max_drawdown) << '\n';
        }
      }
      return kOk;
    }

    if (scan_cmd->parsed()) {
      const auto table = exhaustive_scan(scan_n, m_min, m_max, g.threads);
      const auto csv = best_table_csv(table);
      if (g.out_path.empty()) {
        out << csv;
        return kOk;
      }
      write_text(g.out_path, csv);
      for (const auto& row : table.rows) {
        out << "m=" << row.m << " max_r=" << num(row.max_r) << " lambda2=" << num(row.lambda2)
            << " lambdaN=" << num(row.lambdaN) << " connected=" << row.n_connected_graphs << '\n';
      }
      const auto drops = nonmonotonicity_report(table);
      out << "nonmonotone:";
      if (drops.empty()) out << " none";
      for (const auto& [a, b] : drops) out << " (" << a << ',' << b << ')';
      out << '\n';
      return kOk;
    }

    if (anneal_cmd->parsed()) {
      const auto res = anneal(anneal_n, anneal_m, g.seed, schedule, g.threads);
      out << "best_r=" << num(res.best_r) << " evaluations=" << res.evaluations << '\n'
          << "schedule=" << res.schedule_desc << '\n'
          << "edges=" << format_edges(res.best_graph) << '\n';
      if (!g.out_path.empty()) write_text(g.out_path, serialize_edge_list(res.best_graph) + '\n');
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace syncgraph::cli
