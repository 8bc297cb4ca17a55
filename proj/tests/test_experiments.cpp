#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "syncgraph/error.hpp"
#include "syncgraph/experiments.hpp"
#include "syncgraph/spectra.hpp"

using namespace syncgraph;

namespace {

Trajectory make(std::vector<double> rs) {
  Trajectory t;
  for (std::size_t i = 0; i < rs.size(); ++i) t.points.push_back({static_cast<int>(i), rs[i], rs[i], 1.0});
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Trajectory, RandomRunSaturatesC10) {
  const auto t = edge_add_trajectory(cycle_graph(10), {StrategyKind::random, 3}, 35, "cycle:10");
  ASSERT_EQ(t.points.size(), 36u);
  EXPECT_EQ(t.final_graph, complete_graph(10));
  EXPECT_NEAR(t.points.back().r, 1.0, 1e-9);
  for (std::size_t i = 0; i < t.points.size(); ++i) EXPECT_EQ(t.points[i].m_add, static_cast<int>(i));
}

TEST(Trajectory, FirstChordOnC10Decreases) {
  // r(C10) from the closed-form cycle spectrum
  const auto closed = cycle_spectrum_closed_form(10);
  const double r_c10 = closed.values[1] / closed.lambda_max();
  EXPECT_NEAR(r_c10, 0.0954915028125, 1e-12);

  const auto t = edge_add_trajectory(cycle_graph(10), {StrategyKind::degree_homogeneous, 1}, 1);
  EXPECT_NEAR(t.points[0].r, r_c10, 1e-12);
  EXPECT_LT(t.points[1].r, r_c10);
}

TEST(Trajectory, FirstAdditionToCycleAlwaysDecreases) {
  for (int n = 5; n <= 30; ++n) {
    for (auto kind : {StrategyKind::degree_homogeneous, StrategyKind::random}) {
      const auto t = edge_add_trajectory(cycle_graph(n), {kind, static_cast<std::uint64_t>(n)}, 1);
      EXPECT_LT(t.points[1].r, t.points[0].r - 1e-12) << n;
    }
  }
}

TEST(Trajectory, HomogeneousC50GainsOverall) {
  const auto t = edge_add_trajectory(cycle_graph(50), {StrategyKind::degree_homogeneous, 11}, 200);
  EXPECT_GT(t.points.back().r, t.points.front().r);
}

TEST(Trajectory, HomogeneousStrategyKeepsDegreesBalanced) {
  // picking minimal degree sums keeps the spread of degrees within 1
  const auto t = edge_add_trajectory(cycle_graph(12), {StrategyKind::degree_homogeneous, 4}, 30);
  const auto p = degree_profile(t.final_graph);
  EXPECT_LE(p.d_max - p.d_min, 1);
}

TEST(Trajectory, EigenvaluesNeverDecrease) {
  for (auto kind : {StrategyKind::degree_homogeneous, StrategyKind::random}) {
    const auto g0 = generate(GeneratorSpec::barabasi_albert(30, 2, 8));
    const auto t = edge_add_trajectory(g0, {kind, 8}, 120);
    for (std::size_t i = 1; i < t.points.size(); ++i) {
      EXPECT_GE(t.points[i].lambda2, t.points[i - 1].lambda2 - 1e-9);
      EXPECT_GE(t.points[i].lambdaN, t.points[i - 1].lambdaN - 1e-9);
    }
  }
}

TEST(Trajectory, DeterministicForFixedSeed) {
  const auto a = edge_add_trajectory(cycle_graph(20), {StrategyKind::random, 99}, 60);
  const auto b = edge_add_trajectory(cycle_graph(20), {StrategyKind::random, 99}, 60);
  EXPECT_EQ(trajectory_csv(a), trajectory_csv(b));
  const auto c = edge_add_trajectory(cycle_graph(20), {StrategyKind::random, 100}, 60);
  EXPECT_NE(trajectory_csv(a), trajectory_csv(c));
}

TEST(Trajectory, Errors) {
  EXPECT_THROW(edge_add_trajectory(cycle_graph(10), {}, 36), InvalidSpec);
  EXPECT_THROW(edge_add_trajectory(Graph::build(3, {{0, 1}}), {}, 1), DisconnectedGraph);
}

TEST(Trajectory, SaturationSteps) {
  EXPECT_EQ(steps_to_saturation(cycle_graph(10), 1.0), 35);
  EXPECT_EQ(steps_to_saturation(cycle_graph(50), 0.5), 613 - 50);
  EXPECT_EQ(steps_to_saturation(complete_graph(5), 0.5), 0);
}

TEST(TrajectoryStats, Examples) {
  const auto rising = trajectory_stats(make({0.1, 0.2, 0.3}));
  EXPECT_EQ(rising.n_decreasing_steps, 0);
  EXPECT_DOUBLE_EQ(rising.max_drawdown, 0.0);

  const auto flat = trajectory_stats(make({0.3, 0.3, 0.3}));
  EXPECT_DOUBLE_EQ(flat.net_gain, 0.0);
  EXPECT_DOUBLE_EQ(flat.max_drawdown, 0.0);

  const auto dip = trajectory_stats(make({0.2, 0.5, 0.1, 0.4, 0.3}));
  EXPECT_EQ(dip.n_decreasing_steps, 2);
  EXPECT_NEAR(dip.max_drawdown, 0.4, 1e-15);
  EXPECT_NEAR(dip.net_gain, 0.1, 1e-15);

  EXPECT_THROW(trajectory_stats(make({0.3})), InvalidSpec);
}

TEST(TrajectoryStats, C5ToK5) {
  // C5 -> C5+e{1,3} -> ... -> K5: the first step drops 0.3820 -> 0.2993
  Graph g = cycle_graph(5);
  Trajectory t;
  t.points.push_back({0, sync_report(g).r});
  int m = 0;
  for (const auto& e : cycle_graph(5).non_edges()) {
    g = add_edge(g, e.u, e.v);
    t.points.push_back({++m, sync_report(g).r});
  }
  EXPECT_EQ(t.points.size(), 6u);
  EXPECT_EQ(g, complete_graph(5));
  EXPECT_NEAR(t.points[0].r, 0.3820, 1e-4);
  EXPECT_NEAR(t.points[1].r, 0.2993, 1e-4);
  const auto st = trajectory_stats(t);
  EXPECT_GE(st.n_decreasing_steps, 1);
  EXPECT_NEAR(st.net_gain, 1.0 - t.points[0].r, 1e-12);
}

TEST(ExportCsv, WritesCsvAndMeta) {
  const auto dir = std::filesystem::temp_directory_path() / "syncgraph_test_export";
  std::filesystem::create_directories(dir);
  const auto t = edge_add_trajectory(cycle_graph(6), {StrategyKind::random, 2}, 1, "cycle:6");
  export_csv(t, dir / "traj.csv");

  const auto csv = slurp(dir / "traj.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.rfind("m_add,r,lambda2,lambdaN\n0,", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  const auto back = parse_trajectory_csv(csv);
  ASSERT_EQ(back.size(), t.points.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].m_add, t.points[i].m_add);
    EXPECT_EQ(back[i].r, t.points[i].r);
    EXPECT_EQ(back[i].lambda2, t.points[i].lambda2);
    EXPECT_EQ(back[i].lambdaN, t.points[i].lambdaN);
  }

  const auto meta = slurp(dir / "traj.meta");
  EXPECT_NE(meta.find("seed_graph=cycle:6\n"), std::string::npos);
  EXPECT_NE(meta.find("strategy=random\n"), std::string::npos);
  EXPECT_NE(meta.find("seed=2\n"), std::string::npos);
  EXPECT_NE(meta.find(std::string("version=") + kToolVersion), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(ExportCsv, UnwritablePath) {
  const auto t = edge_add_trajectory(cycle_graph(6), {}, 1);
  EXPECT_THROW(export_csv(t, "/nonexistent-dir/traj.csv"), IoError);
}

TEST(Strategy, Parse) {
  EXPECT_EQ(parse_strategy("homog"), StrategyKind::degree_homogeneous);
  EXPECT_EQ(parse_strategy("random"), StrategyKind::random);
  EXPECT_THROW(parse_strategy("greedy"), InvalidSpec);
}
