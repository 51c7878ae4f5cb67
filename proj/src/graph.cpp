#include "tvsc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tvsc/rng.hpp"

namespace tvsc {

namespace {

constexpr double kPowerTolerance = 1e-8;

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.i >= n_ || e.j >= n_) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ") with n = " + std::to_string(n_));
    }
    if (e.i == e.j) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.i));
    }
    if (!std::isfinite(e.w) || e.w < 0.0) {
      throw std::invalid_argument("edge weight must be finite and nonnegative");
    }
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i == b.i && a.j == b.j;
  });
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->i) + ", " +
                                std::to_string(dup->j) + ")");
  }
}

Laplacian::Laplacian(const WeightedGraph& g) : degrees_(g.n(), 0.0), offsets_(g.n() + 1, 0) {
  const std::size_t n = g.n();
  for (const Edge& e : g.edges()) {
    ++offsets_[e.i + 1];
    ++offsets_[e.j + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  columns_.resize(offsets_[n]);
  weights_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (i, j), so each row's columns come out ascending.
  for (const Edge& e : g.edges()) {
    columns_[cursor[e.i]] = e.j;
    weights_[cursor[e.i]++] = e.w;
    degrees_[e.i] += e.w;
  }
  for (const Edge& e : g.edges()) {
    columns_[cursor[e.j]] = e.i;
    weights_[cursor[e.j]++] = e.w;
    degrees_[e.j] += e.w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = offsets_[i], en = offsets_[i + 1];
    std::vector<std::pair<std::size_t, double>> row;
    row.reserve(en - b);
    for (auto p = b; p < en; ++p) row.emplace_back(columns_[p], weights_[p]);
    std::sort(row.begin(), row.end());
    for (auto p = b; p < en; ++p) {
      columns_[p] = row[p - b].first;
      weights_[p] = row[p - b].second;
    }
  }
}

double Laplacian::max_degree() const noexcept {
  return degrees_.empty() ? 0.0 : *std::max_element(degrees_.begin(), degrees_.end());
}

void Laplacian::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t n = degrees_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = degrees_[i] * x[i];
    for (auto p = offsets_[i]; p < offsets_[i + 1]; ++p) acc -= weights_[p] * x[columns_[p]];
    y[i] = acc;
  }
}

Eigen::MatrixXd Laplacian::to_dense() const {
  const auto n = static_cast<Eigen::Index>(degrees_.size());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    L(i, i) = degrees_[i];
    for (auto p = offsets_[i]; p < offsets_[i + 1]; ++p) {
      L(i, static_cast<Eigen::Index>(columns_[p])) -= weights_[p];
    }
  }
  return L;
}

Laplacian build_laplacian(const WeightedGraph& g) { return Laplacian(g); }

double quadratic_form(const Laplacian& L, std::span<const double> f) {
  if (f.size() != L.n()) {
    throw std::invalid_argument("quadratic_form: signal has " + std::to_string(f.size()) +
                                " entries, Laplacian has dimension " + std::to_string(L.n()));
  }
  std::vector<double> Lf(f.size());
  L.apply(f, Lf);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * Lf[i];
  return s;
}

namespace {

MaxEigenvalue power_iteration(const Laplacian& L, int max_iters) {
  const std::size_t n = L.n();
  MaxEigenvalue out;
  if (n == 0 || L.max_degree() == 0.0) {
    out.converged = true;
    return out;
  }
  // Fixed pseudo-random start so the estimate is reproducible.
  Rng rng(0x5eed'1a2b'3c4dULL + n);
  std::vector<double> x(n), y(n);
  double norm = 0.0;
  for (auto& v : x) {
    v = rng.normal();
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (auto& v : x) v /= norm;

  double lambda = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    L.apply(x, y);
    double rq = 0.0, yn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rq += x[i] * y[i];
      yn += y[i] * y[i];
    }
    yn = std::sqrt(yn);
    out.iterations = it;
    if (yn == 0.0) {
      out.value = 0.0;
      out.converged = true;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / yn;
    const bool settled = it > 1 && std::abs(rq - lambda) <= kPowerTolerance * std::abs(rq);
    lambda = rq;
    if (settled) {
      out.value = lambda;
      out.converged = true;
      return out;
    }
  }
  out.value = lambda;
  return out;
}

}  // namespace

MaxEigenvalue max_eigenvalue(std::span<const Laplacian> blocks, int max_iters) {
  if (blocks.empty()) throw std::invalid_argument("max_eigenvalue: no blocks");
  MaxEigenvalue best;
  best.converged = true;
  for (const Laplacian& L : blocks) {
    const MaxEigenvalue b = power_iteration(L, max_iters);
    best.value = std::max(best.value, b.value);
    best.converged = best.converged && b.converged;
    best.iterations = std::max(best.iterations, b.iterations);
  }
  return best;
}

EigenPairs smallest_eigenvectors(const Laplacian& L, std::size_t m) {
  const std::size_t n = L.n();
  if (m == 0 || m > n) {
    throw std::invalid_argument("smallest_eigenvectors: need 1 <= m <= n, got m = " +
                                std::to_string(m) + ", n = " + std::to_string(n));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L.to_dense());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("smallest_eigenvectors: eigendecomposition failed");
  }
  EigenPairs out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  out.vectors = solver.eigenvectors().leftCols(static_cast<Eigen::Index>(m));
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < out.vectors.rows(); ++r) {
      const double a = std::abs(out.vectors(r, c));
      // 1e-12 slack keeps the choice stable for near-equal magnitudes.
      if (a > best + 1e-12) {
        best = a;
        arg = r;
      }
    }
    if (out.vectors(arg, c) < 0.0) out.vectors.col(c) *= -1.0;
  }
  return out;
}

TVGraphSequence::TVGraphSequence(std::vector<WeightedGraph> graphs) : graphs_(std::move(graphs)) {
  if (graphs_.empty()) throw std::invalid_argument("TVGraphSequence: at least one frame required");
  n_ = graphs_.front().n();
  for (std::size_t t = 1; t < graphs_.size(); ++t) {
    if (graphs_[t].n() != n_) {
      throw std::invalid_argument("TVGraphSequence: frame " + std::to_string(t) + " has " +
                                  std::to_string(graphs_[t].n()) + " nodes, expected " +
                                  std::to_string(n_));
    }
  }
}

std::vector<Laplacian> TVGraphSequence::laplacians() const {
  std::vector<Laplacian> out;
  out.reserve(graphs_.size());
  for (const auto& g : graphs_) out.emplace_back(g);
  return out;
}

StackedVector::StackedVector(std::size_t n, std::size_t t_len, std::vector<double> values)
    : n_(n), t_len_(t_len), values_(std::move(values)) {
  if (values_.size() != n_ * t_len_) {
    throw std::invalid_argument("StackedVector: expected " + std::to_string(n_ * t_len_) +
                                " values, got " + std::to_string(values_.size()));
  }
}

StackedVector temporal_diff(const StackedVector& c) {
  StackedVector out(c.n(), c.t_len());
  for (std::size_t t = 1; t < c.t_len(); ++t) {
    auto cur = c.frame(t), prev = c.frame(t - 1);
    auto o = out.frame(t);
    for (std::size_t i = 0; i < c.n(); ++i) o[i] = cur[i] - prev[i];
  }
  return out;
}

StackedVector temporal_diff_adjoint(const StackedVector& d) {
  StackedVector out(d.n(), d.t_len());
  const std::size_t T = d.t_len();
  for (std::size_t t = 0; t < T; ++t) {
    auto o = out.frame(t);
    if (t >= 1) {
      auto dt = d.frame(t);
      for (std::size_t i = 0; i < d.n(); ++i) o[i] += dt[i];
    }
    if (t + 1 < T) {
      auto dn = d.frame(t + 1);
      for (std::size_t i = 0; i < d.n(); ++i) o[i] -= dn[i];
    }
  }
  return out;
}

}  // namespace tvsc
