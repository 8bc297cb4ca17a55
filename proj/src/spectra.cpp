#include "syncgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syncgraph/error.hpp"

namespace syncgraph {

SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix l(static_cast<std::size_t>(g.node_count()));
  for (const auto& e : g.edges()) {
    l(e.u, e.v) = -1.0;
    l(e.v, e.u) = -1.0;
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
  }
  return l;
}

Spectrum laplacian_spectrum(const Graph& g, double tol) {
  return {symmetric_eigenvalues(laplacian_matrix(g), tol), tol};
}

int eigen_multiplicity(const Spectrum& s, double value, double tol) {
  if (s.values.empty()) return 0;
  const double width = tol * std::max(1.0, s.lambda_max());
  const auto& v = s.values;

  std::size_t lo = v.size();
  std::size_t hi = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i] - value) <= width) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  if (lo == v.size()) return 0;
  while (lo > 0 && v[lo] - v[lo - 1] <= width) --lo;
  while (hi + 1 < v.size() && v[hi + 1] - v[hi] <= width) ++hi;
  return static_cast<int>(hi - lo + 1);
}

SyncReport sync_report(const Spectrum& s) {
  if (s.size() < 2) throw InvalidSpec("eigenratio needs at least two nodes");
  SyncReport rep;
  rep.lambda2 = s.lambda2();
  rep.lambdaN = s.lambda_max();
  rep.r = rep.lambda2 / rep.lambdaN;
  rep.mult2 = eigen_multiplicity(s, rep.lambda2);
  rep.multN = eigen_multiplicity(s, rep.lambdaN);
  return rep;
}

SyncReport sync_report(const Graph& g, double tol) {
  if (g.node_count() < 2) throw InvalidSpec("eigenratio needs at least two nodes");
  const auto comps = connectivity(g);
  if (comps.count != 1) {
    throw DisconnectedGraph("graph has " + std::to_string(comps.count) + " components; lambda2 = 0");
  }
  return sync_report(laplacian_spectrum(g, tol));
}

Spectrum cycle_spectrum_closed_form(int n) {
  if (n < 3) throw InvalidSpec("cycle spectrum needs N >= 3");
  Spectrum s;
  s.values.reserve(static_cast<std::size_t>(n));
  s.values.push_back(0.0);
  const double step = std::numbers::pi / n;
  for (int k = 1; k < n; ++k) {
    s.values.push_back(3.0 - std::sin(3.0 * k * step) / std::sin(k * step));
  }
  std::sort(s.values.begin(), s.values.end());
  return s;
}

Spectrum complement_spectrum(const Spectrum& s) {
  const std::size_t n = s.size();
  Spectrum out;
  out.tol = s.tol;
  out.values.reserve(n);
  out.values.push_back(0.0);
  // i = 2..n (1-based) pairs with values[n + 1 - i] (0-based)
  for (std::size_t i = 2; i <= n; ++i) {
    out.values.push_back(static_cast<double>(n) - s.values[n + 1 - i]);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace syncgraph
