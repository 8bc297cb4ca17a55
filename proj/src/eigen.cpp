#include <algorithm>
#include <cmath>
#include <limits>

#include "syncgraph/error.hpp"
#include "syncgraph/spectra.hpp"

namespace syncgraph {

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

namespace {

// Householder reduction of the symmetric matrix held in `a` (row-major,
// lower triangle used) to tridiagonal form. On return d holds the diagonal
// and e the subdiagonal with e[0] = 0.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on the tridiagonal (d, e). Eigenvalues land in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, std::size_t n) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 60;

  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps) throw Error("tridiagonal QL failed to converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw ShapeError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return {};

  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol * scale) {
        throw NotSymmetric("entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                           std::to_string(j) + "," + std::to_string(i) + ") differ");
      }
    }
  }

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  std::vector<double> d(n);
  std::vector<double> e(n);
  tridiagonalize(a, n, d, e);
  tridiagonal_ql(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace syncgraph
