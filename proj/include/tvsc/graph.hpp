#pragma once

// Graph containers, combinatorial Laplacians, spectra, and the temporal
// difference operator on frame-stacked vectors.

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace tvsc {

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with nonnegative weights. Each unordered pair is stored
/// once, canonicalized to i < j and sorted lexicographically.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints,
  /// negative or non-finite weights, and duplicate pairs.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// L = D - W, kept as a symmetric CSR adjacency plus the degree diagonal.
/// apply() is the sparse product used inside iterative solvers; to_dense()
/// materializes the matrix for eigendecomposition.
class Laplacian {
 public:
  Laplacian() = default;
  explicit Laplacian(const WeightedGraph& g);

  std::size_t n() const noexcept { return degrees_.size(); }
  std::span<const double> degrees() const noexcept { return degrees_; }
  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const std::size_t> columns() const noexcept { return columns_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double max_degree() const noexcept;

  /// y = L x. Rows are evaluated independently in a fixed order.
  void apply(std::span<const double> x, std::span<double> y) const;
  Eigen::MatrixXd to_dense() const;

 private:
  std::vector<double> degrees_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> columns_;
  std::vector<double> weights_;
};

Laplacian build_laplacian(const WeightedGraph& g);

/// f^T L f. Throws std::invalid_argument on dimension mismatch.
double quadratic_form(const Laplacian& L, std::span<const double> f);

struct MaxEigenvalue {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest eigenvalue of diag(L_1, ..., L_T) by per-block power iteration to
/// relative tolerance 1e-8. When a block does not converge the best Rayleigh
/// estimate is returned with converged = false.
MaxEigenvalue max_eigenvalue(std::span<const Laplacian> blocks, int max_iters = 20000);

struct EigenPairs {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // n x m, unit columns
};

/// The m smallest eigenpairs from a dense symmetric solve. Each vector's sign
/// is fixed so that its largest-magnitude entry (lowest index on ties) is
/// positive. Throws std::invalid_argument if m == 0 or m > n.
EigenPairs smallest_eigenvectors(const Laplacian& L, std::size_t m);

/// A sequence of graphs over one registered node set.
class TVGraphSequence {
 public:
  TVGraphSequence() = default;
  /// Throws std::invalid_argument if empty or node counts differ.
  explicit TVGraphSequence(std::vector<WeightedGraph> graphs);

  std::size_t n() const noexcept { return n_; }
  std::size_t t_len() const noexcept { return graphs_.size(); }
  const WeightedGraph& operator[](std::size_t t) const { return graphs_[t]; }
  std::span<const WeightedGraph> graphs() const noexcept { return graphs_; }

  std::vector<Laplacian> laplacians() const;

  friend bool operator==(const TVGraphSequence&, const TVGraphSequence&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<WeightedGraph> graphs_;
};

/// T frames of N reals, frame-major: frame t is [t*N, (t+1)*N).
class StackedVector {
 public:
  StackedVector() = default;
  StackedVector(std::size_t n, std::size_t t_len, double fill = 0.0)
      : n_(n), t_len_(t_len), values_(n * t_len, fill) {}
  /// Throws std::invalid_argument unless values.size() == n * t_len.
  StackedVector(std::size_t n, std::size_t t_len, std::vector<double> values);

  std::size_t n() const noexcept { return n_; }
  std::size_t t_len() const noexcept { return t_len_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<double> frame(std::size_t t) { return {values_.data() + t * n_, n_}; }
  std::span<const double> frame(std::size_t t) const { return {values_.data() + t * n_, n_}; }
  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const StackedVector&, const StackedVector&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t t_len_ = 0;
  std::vector<double> values_;
};

/// Frame 0 of the result is zero; frame t >= 1 is c_t - c_{t-1}.
StackedVector temporal_diff(const StackedVector& c);

/// Adjoint of temporal_diff: frame t is [t >= 1] d_t - [t + 1 < T] d_{t+1}.
StackedVector temporal_diff_adjoint(const StackedVector& d);

}  // namespace tvsc
