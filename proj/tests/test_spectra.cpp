#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "syncgraph/error.hpp"
#include "syncgraph/spectra.hpp"

using namespace syncgraph;

namespace {

void expect_near_all(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

SymmetricMatrix to_matrix(const oracle::Matrix& m) {
  SymmetricMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

}  // namespace

TEST(SymmetricEigenvalues, SmallExamples) {
  expect_near_all(symmetric_eigenvalues(SymmetricMatrix{{2, -1}, {-1, 2}}), {1, 3}, 1e-12);
  expect_near_all(symmetric_eigenvalues(SymmetricMatrix(3)), {0, 0, 0}, 0.0);
  expect_near_all(symmetric_eigenvalues(laplacian_matrix(complete_graph(4))), {0, 4, 4, 4}, 1e-12);
  expect_near_all(symmetric_eigenvalues(SymmetricMatrix{{7}}), {7}, 0.0);
  EXPECT_TRUE(symmetric_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST(SymmetricEigenvalues, Errors) {
  EXPECT_THROW(symmetric_eigenvalues(SymmetricMatrix{{1, 2}, {3, 1}}), NotSymmetric);
  EXPECT_THROW(symmetric_eigenvalues(SymmetricMatrix(2, 3)), ShapeError);
  // asymmetry below tolerance is accepted
  EXPECT_NO_THROW(symmetric_eigenvalues(SymmetricMatrix{{1, 2}, {2 + 1e-12, 1}}));
}

TEST(SymmetricEigenvalues, MatchesJacobiOracle) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> entry(-5.0, 5.0);
  for (int n : {1, 2, 3, 5, 8, 13, 30, 60, 120, 200}) {
    oracle::Matrix a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a[i][j] = a[j][i] = entry(rng);
    const auto want = oracle::jacobi_eigenvalues(a);
    const auto got = symmetric_eigenvalues(to_matrix(a));
    const double radius = std::max(std::abs(want.front()), std::abs(want.back()));
    expect_near_all(got, want, kSolverTol * std::max(1.0, radius));
  }
}

TEST(SymmetricEigenvalues, Deterministic) {
  const auto l = laplacian_matrix(generate(GeneratorSpec::barabasi_albert(80, 3, 9)));
  const auto a = symmetric_eigenvalues(l);
  const auto b = symmetric_eigenvalues(l);
  EXPECT_EQ(a, b);
}

TEST(LaplacianSpectrum, C5MatchesReferenceValues) {
  expect_near_all(laplacian_spectrum(cycle_graph(5)).values, {0, 1.3820, 1.3820, 3.6180, 3.6180}, 1e-3);
}

TEST(LaplacianSpectrum, CompleteBipartite23) {
  // frozen from the Jacobi oracle; lambdaN = n because the complement is disconnected
  const auto s = laplacian_spectrum(complete_bipartite_graph(2, 3));
  expect_near_all(s.values, oracle::laplacian_eigenvalues(complete_bipartite_graph(2, 3)), 1e-12);
  expect_near_all(s.values, {0, 2, 2, 3, 5}, 1e-12);
}

TEST(LaplacianSpectrum, SingleNode) {
  expect_near_all(laplacian_spectrum(Graph::build(1, {})).values, {0}, 0.0);
}

TEST(LaplacianSpectrum, PetersenSpectrum) {
  expect_near_all(laplacian_spectrum(petersen_graph()).values, {0, 2, 2, 2, 2, 2, 5, 5, 5, 5}, 1e-12);
}

TEST(LaplacianSpectrum, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 40;
    const auto g = oracle::random_graph(n, 0.05 + 0.9 * (trial % 10) / 10.0, rng);
    const auto s = laplacian_spectrum(g);
    const double scale = std::max(1.0, s.lambda_max());
    EXPECT_NEAR(s.values[0], 0.0, s.tol * scale);
    for (double v : s.values) EXPECT_GE(v, -s.tol * scale);
    double trace = 0.0;
    for (double v : s.values) trace += v;
    EXPECT_NEAR(trace, 2.0 * static_cast<double>(g.edge_count()), n * s.tol * scale);
    const auto comps = connectivity(g);
    if (comps.count == 1 && n > 1) EXPECT_GT(s.values[1], s.tol);
    EXPECT_EQ(eigen_multiplicity(s, 0.0), comps.count);
  }
}

TEST(SyncReport, Cycles) {
  const auto c6 = sync_report(cycle_graph(6));
  EXPECT_NEAR(c6.r, 0.25, 1e-12);
  EXPECT_NEAR(c6.lambda2, 1.0, 1e-12);
  EXPECT_NEAR(c6.lambdaN, 4.0, 1e-12);
  EXPECT_EQ(c6.mult2, 2);
  EXPECT_EQ(c6.multN, 1);
  EXPECT_NEAR(sync_report(add_edge(cycle_graph(6), 0, 3)).r, 0.2, 1e-12);
}

TEST(SyncReport, Errors) {
  const auto two_triangles = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_THROW(sync_report(two_triangles), DisconnectedGraph);
  EXPECT_THROW(sync_report(Graph::build(1, {})), InvalidSpec);
}

TEST(SyncReport, RatioInUnitInterval) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_connected_graph(2 + trial % 25, 0.2, rng);
    const auto rep = sync_report(g);
    EXPECT_GT(rep.r, 0.0);
    EXPECT_LE(rep.r, 1.0 + 1e-12);
    EXPECT_DOUBLE_EQ(rep.r, rep.lambda2 / rep.lambdaN);
    EXPECT_GE(rep.mult2, 1);
    EXPECT_GE(rep.multN, 1);
  }
}

TEST(CycleClosedForm, Examples) {
  expect_near_all(cycle_spectrum_closed_form(4).values, {0, 2, 2, 4}, 1e-12);
  expect_near_all(cycle_spectrum_closed_form(5).values, {0, 1.3820, 1.3820, 3.6180, 3.6180}, 1e-3);
  const auto c6 = cycle_spectrum_closed_form(6);
  expect_near_all(c6.values, {0, 1, 1, 3, 3, 4}, 1e-12);
  EXPECT_NEAR(c6.lambda_max(), 4.0, 1e-12);
  EXPECT_THROW(cycle_spectrum_closed_form(2), InvalidSpec);
}

TEST(CycleClosedForm, MatchesCosineIdentityAndSolver) {
  for (int n = 3; n <= 100; ++n) {
    std::vector<double> cosine;
    for (int k = 0; k < n; ++k) cosine.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
    std::sort(cosine.begin(), cosine.end());
    const auto closed = cycle_spectrum_closed_form(n).values;
    expect_near_all(closed, cosine, 1e-9);
    expect_near_all(closed, laplacian_spectrum(cycle_graph(n)).values, 1e-9);
    EXPECT_LE(closed.back(), 4.0 + 1e-12);
  }
}

TEST(ComplementSpectrum, Examples) {
  expect_near_all(complement_spectrum(laplacian_spectrum(complete_graph(5))).values, {0, 0, 0, 0, 0}, 1e-12);
  // both frozen from direct decomposition of the complement
  expect_near_all(complement_spectrum(laplacian_spectrum(cycle_graph(4))).values, {0, 0, 2, 2}, 1e-12);
  expect_near_all(oracle::laplacian_eigenvalues(complement(cycle_graph(4))), {0, 0, 2, 2}, 1e-12);
  expect_near_all(complement_spectrum(laplacian_spectrum(complete_bipartite_graph(2, 3))).values,
                  {0, 0, 2, 3, 3}, 1e-12);
  expect_near_all(oracle::laplacian_eigenvalues(complement(complete_bipartite_graph(2, 3))), {0, 0, 2, 3, 3}, 1e-12);
}

TEST(ComplementSpectrum, PairingIdentityOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 30;
    const auto g = oracle::random_graph(n, (1 + trial % 9) / 10.0, rng);
    expect_near_all(complement_spectrum(laplacian_spectrum(g)).values, laplacian_spectrum(complement(g)).values,
                    1e-6);
  }
}

TEST(EigenMultiplicity, Examples) {
  EXPECT_EQ(eigen_multiplicity(laplacian_spectrum(cycle_graph(6)), 1.0, 1e-6), 2);
  EXPECT_EQ(eigen_multiplicity(laplacian_spectrum(complete_graph(4)), 4.0, 1e-6), 3);
  EXPECT_EQ(eigen_multiplicity(laplacian_spectrum(cycle_graph(5)), 2.0, 1e-6), 0);
}

TEST(EigenMultiplicity, ClusterIsClosedUnderTolerance) {
  // 1.0 is within tol of 1.0+0.6e-6 which is within tol of 1.0+1.2e-6
  const Spectrum s{{0.0, 1.0, 1.0 + 0.6e-6, 1.0 + 1.2e-6, 3.0}, kSolverTol};
  EXPECT_EQ(eigen_multiplicity(s, 1.0, 1e-6 / 3.0), 3);
}

TEST(SpectralBounds, LemmaBoundsOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 20;
    const auto g = oracle::random_connected_graph(n, 0.15, rng);
    const auto s = laplacian_spectrum(g);
    const auto deg = degree_profile(g);
    const double slack = kSolverTol * std::max(1.0, s.lambda_max());
    EXPECT_LE(s.lambda_max(), n + slack);
    EXPECT_GE(s.lambda_max(), deg.d_max + 1 - slack);
    if (g.edge_count() < max_edges(n)) EXPECT_LE(s.lambda2(), deg.d_min + slack);
    const int q = connectivity(complement(g)).count;
    const bool at_n = std::abs(s.lambda_max() - n) <= kClusterTol * n;
    EXPECT_EQ(at_n, q >= 2);
    if (at_n) EXPECT_EQ(eigen_multiplicity(s, n), q - 1);
  }
}
