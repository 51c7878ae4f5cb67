#include "tvsc/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tvsc/rng.hpp"

namespace tvsc {

namespace {

// Min-cost perfect matching on a square cost matrix (Hungarian method with
// potentials). Returns match[row] = column.
std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> match(n, 0);
  for (std::size_t j = 1; j <= n; ++j) match[p[j] - 1] = static_cast<int>(j - 1);
  return match;
}

std::vector<double> row_major(const Eigen::MatrixXd& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  const auto m = static_cast<std::size_t>(points.cols());
  std::vector<double> out(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

double sq_dist(const double* a, const double* b, std::size_t m) {
  double d = 0.0;
  for (std::size_t j = 0; j < m; ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
  return d;
}

std::vector<double> kmeanspp_centers(const std::vector<double>& pts, std::size_t n, std::size_t m,
                                     std::size_t k, Rng& rng) {
  std::vector<double> centers(k * m);
  std::size_t first = rng.uniform_index(n);
  std::copy_n(pts.begin() + static_cast<std::ptrdiff_t>(first * m), m, centers.begin());
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = sq_dist(&pts[i * m], centers.data(), m);
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double d : d2) total += d;
    std::size_t pick = n - 1;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = rng.uniform_index(n);
    }
    std::copy_n(pts.begin() + static_cast<std::ptrdiff_t>(pick * m), m,
                centers.begin() + static_cast<std::ptrdiff_t>(c * m));
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], sq_dist(&pts[i * m], &centers[c * m], m));
    }
  }
  return centers;
}

KMeansResult lloyd(const std::vector<double>& pts, std::size_t n, std::size_t m, std::size_t k,
                   std::vector<double> centers, const KMeansOptions& opt) {
  const kernels::KernelSet& ks = kernels::kernel_set(opt.backend);
  KMeansResult r;
  r.assignment.assign(n, -1);
  std::vector<int> assign(n);
  std::vector<double> dist(n);
  std::vector<std::size_t> counts(k);
  for (int it = 0; it < opt.max_iters; ++it) {
    r.inertia = ks.assign_nearest(pts, centers, n, m, k, assign, dist);
    if (assign == r.assignment) break;
    r.assignment = assign;
    std::fill(centers.begin(), centers.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(assign[i]);
      ++counts[c];
      for (std::size_t j = 0; j < m; ++j) centers[c * m + j] += pts[i * m + j];
    }
    std::vector<bool> claimed(n, false);
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        for (std::size_t j = 0; j < m; ++j) centers[c * m + j] /= static_cast<double>(counts[c]);
        continue;
      }
      // Empty cluster: move its center onto the worst-fit point.
      std::size_t far = 0;
      double best = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!claimed[i] && dist[i] > best) {
          best = dist[i];
          far = i;
        }
      }
      claimed[far] = true;
      std::copy_n(pts.begin() + static_cast<std::ptrdiff_t>(far * m), m,
                  centers.begin() + static_cast<std::ptrdiff_t>(c * m));
    }
  }
  r.inertia = ks.assign_nearest(pts, centers, n, m, k, assign, dist);
  r.assignment = assign;
  return r;
}

void orthogonalize(std::span<double> x, const OrthogonalityBasis& basis, std::size_t t) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t l = 0; l < basis.count(); ++l) {
      const auto v = basis.direction(l, t);
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * v[i];
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= s * v[i];
    }
  }
}

}  // namespace

Eigen::MatrixXd EmbeddingSequence::frame(std::size_t t) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t l = 0; l < columns.size(); ++l) {
    const auto f = columns[l].frame(t);
    for (std::size_t i = 0; i < n; ++i) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) = f[i];
    }
  }
  return out;
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                    const KMeansOptions& options) {
  const auto n = static_cast<std::size_t>(points.rows());
  const auto m = static_cast<std::size_t>(points.cols());
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("kmeans: need 1 <= k <= n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  if (options.restarts < 1 || options.max_iters < 1) {
    throw std::invalid_argument("kmeans: restarts and max_iters must be positive");
  }
  const std::vector<double> pts = row_major(points);
  const auto kk = static_cast<std::size_t>(k);
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(r));
    KMeansResult res = lloyd(pts, n, m, kk, kmeanspp_centers(pts, n, m, kk, rng), options);
    if (res.inertia < best.inertia) best = std::move(res);
  }
  return best;
}

std::vector<int> align_labels(std::span<const int> prev, std::span<const int> cur, int k) {
  if (prev.size() != cur.size()) throw std::invalid_argument("align_labels: length mismatch");
  const auto kk = static_cast<std::size_t>(k);
  std::vector<std::vector<double>> cost(kk, std::vector<double>(kk, 0.0));
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i] < 0 || cur[i] >= k || prev[i] < 0 || prev[i] >= k) {
      throw std::invalid_argument("align_labels: label outside [0, k)");
    }
    cost[static_cast<std::size_t>(cur[i])][static_cast<std::size_t>(prev[i])] -= 1.0;
  }
  const std::vector<int> rename = hungarian(cost);
  std::vector<int> out(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) out[i] = rename[static_cast<std::size_t>(cur[i])];
  return out;
}

LabelSequence static_sc(const TVGraphSequence& seq, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("static_sc: k must be at least 2");
  const std::size_t n = seq.n(), T = seq.t_len();
  if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("static_sc: k exceeds node count");
  LabelSequence out(n, T, k);
  const auto frames = static_cast<std::ptrdiff_t>(T);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    const EigenPairs ep = smallest_eigenvectors(Laplacian(seq[t]), static_cast<std::size_t>(k));
    const KMeansResult km = kmeans(ep.vectors, k, derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::copy(km.assignment.begin(), km.assignment.end(), out.frame(t).begin());
  }
  for (std::size_t t = 1; t < T; ++t) {
    const auto aligned = align_labels(out.frame(t - 1), out.frame(t), k);
    std::copy(aligned.begin(), aligned.end(), out.frame(t).begin());
  }
  return out;
}

StackedVector spectral_warm_start(std::span<const Laplacian> blocks,
                                  const OrthogonalityBasis& basis, std::size_t index) {
  const std::size_t T = blocks.size();
  const std::size_t n = blocks.front().n();
  StackedVector c(n, T);
  const auto frames = static_cast<std::ptrdiff_t>(T);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    const EigenPairs ep = smallest_eigenvectors(blocks[t], n);
    auto x = c.frame(static_cast<std::size_t>(t));
    // Take eigenvector `index`, or the next one that survives projection.
    double kept = 0.0;
    for (std::size_t col = std::min(index, n - 1); col < n; ++col) {
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = ep.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col));
      }
      orthogonalize(x, basis, static_cast<std::size_t>(t));
      double sq = 0.0;
      for (double v : x) sq += v * v;
      kept = sq;
      if (sq >= 0.01) break;
    }
    if (!(kept > 0.0)) throw std::runtime_error("spectral_warm_start: no admissible eigenvector");
    const double scale = std::sqrt(static_cast<double>(n) / kept);
    for (double& v : x) v *= scale;
  }
  for (std::size_t t = 1; t < T; ++t) {
    auto cur = c.frame(t);
    const auto prev = c.frame(t - 1);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cur[i] * prev[i];
    if (s < 0.0) {
      for (double& v : cur) v = -v;
    }
  }
  return c;
}

LabelSequence polarity_labels(const StackedVector& c) {
  LabelSequence out(c.n(), c.t_len(), 2);
  for (std::size_t t = 0; t < c.t_len(); ++t) {
    const auto f = c.frame(t);
    auto l = out.frame(t);
    for (std::size_t i = 0; i < c.n(); ++i) l[i] = f[i] >= 0.0 ? 0 : 1;
  }
  return out;
}

TwoWayResult tv_cluster_two(const TVGraphSequence& seq, const SolverConfig& cfg) {
  const std::vector<Laplacian> ls = seq.laplacians();
  const OrthogonalityBasis basis = OrthogonalityBasis::ones(seq.n(), seq.t_len());
  SolveResult res = pds_solve(ls, basis, cfg, spectral_warm_start(ls, basis, 1));
  LabelSequence labels = polarity_labels(res.c);
  return {std::move(labels), std::move(res)};
}

MultiWayResult tv_cluster_multi(const TVGraphSequence& seq, int k, const SolverConfig& cfg) {
  if (k < 2) throw std::invalid_argument("tv_cluster_multi: k must be at least 2");
  const std::size_t n = seq.n(), T = seq.t_len();
  if (static_cast<std::size_t>(k - 1) > n) {
    throw std::invalid_argument("tv_cluster_multi: k - 1 exceeds node count");
  }
  const std::vector<Laplacian> ls = seq.laplacians();
  OrthogonalityBasis basis = OrthogonalityBasis::ones(n, T);
  MultiWayResult out;
  out.embedding.n = n;
  out.embedding.t_len = T;
  for (int level = 1; level < k; ++level) {
    SolverConfig level_cfg = cfg;
    level_cfg.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(level));
    const StackedVector init = spectral_warm_start(ls, basis, static_cast<std::size_t>(level));
    SolveResult res = pds_solve(ls, basis, level_cfg, init);
    if (level + 1 < k) basis.add_direction(res.c);
    out.embedding.columns.push_back(res.c);
    out.solves.push_back(std::move(res));
  }

  out.labels = LabelSequence(n, T, k);
  const std::uint64_t km_seed = derive_seed(cfg.seed, 0x6b6d);
  const auto frames = static_cast<std::ptrdiff_t>(T);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    const KMeansResult km = kmeans(out.embedding.frame(static_cast<std::size_t>(t)), k,
                                   derive_seed(km_seed, static_cast<std::uint64_t>(t)));
    std::copy(km.assignment.begin(), km.assignment.end(), out.labels.frame(t).begin());
  }
  for (std::size_t t = 1; t < T; ++t) {
    const auto aligned = align_labels(out.labels.frame(t - 1), out.labels.frame(t), k);
    std::copy(aligned.begin(), aligned.end(), out.labels.frame(t).begin());
  }
  return out;
}

}  // namespace tvsc
