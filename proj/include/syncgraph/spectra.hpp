#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "syncgraph/graph.hpp"

namespace syncgraph {

/// Default solver tolerance.
inline constexpr double kSolverTol = 1e-9;
/// Relative tolerance for grouping eigenvalues into one multiplicity cluster.
inline constexpr double kClusterTol = 1e-6;

/// Dense real square matrix, row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  SymmetricMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  explicit SymmetricMatrix(std::size_t n) : SymmetricMatrix(n, n) {}
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// L = D - A.
SymmetricMatrix laplacian_matrix(const Graph& g);

/// All eigenvalues of a real symmetric matrix, ascending.
///
/// Householder reduction to tridiagonal form followed by implicit-shift QL.
/// Deterministic: the same input always yields bit-identical output.
/// Throws ShapeError for non-square input and NotSymmetric when
/// |m(i,j) - m(j,i)| exceeds tol * max(1, max|m|).
std::vector<double> symmetric_eigenvalues(const SymmetricMatrix& m, double tol = kSolverTol);

/// Sorted Laplacian eigenvalues of one graph.
struct Spectrum {
  std::vector<double> values;
  double tol = kSolverTol;

  std::size_t size() const noexcept { return values.size(); }
  double lambda2() const { return values.at(1); }
  double lambda_max() const { return values.back(); }
};

Spectrum laplacian_spectrum(const Graph& g, double tol = kSolverTol);

/// Number of entries in the cluster around `value`.
///
/// An entry belongs to the cluster when it lies within tol * max(1, lambda_max)
/// of `value`, or of an entry already in the cluster (sorted neighbours), so
/// a cluster never splits a run of near-equal eigenvalues.
int eigen_multiplicity(const Spectrum& s, double value, double tol = kClusterTol);

/// Eigenratio verdict for a connected graph.
struct SyncReport {
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  double r = 0.0;
  int mult2 = 0;
  int multN = 0;
};

/// Throws DisconnectedGraph when g is disconnected and InvalidSpec for a
/// single node (no lambda2).
SyncReport sync_report(const Graph& g, double tol = kSolverTol);

/// The eigenratio of a precomputed spectrum (no connectivity check).
SyncReport sync_report(const Spectrum& s);

/// Cycle spectrum from mu_{k+1} = 3 - sin(3k pi/N) / sin(k pi/N), sorted.
/// Valid for N >= 3; throws InvalidSpec below that.
Spectrum cycle_spectrum_closed_form(int n);

/// Spectrum of the complement from the spectrum of the graph:
/// lambda_i(G^c) = N - lambda_{N-i+2}(G) for 2 <= i <= N, plus the zero.
Spectrum complement_spectrum(const Spectrum& s);

}  // namespace syncgraph
