#pragma once

// End-to-end pipelines: per-frame spectral clustering, two-way temporal
// clustering by polarity, and K-way temporal clustering by deflation.

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

#include "tvsc/graph.hpp"
#include "tvsc/kernels.hpp"
#include "tvsc/labels.hpp"
#include "tvsc/solver.hpp"

namespace tvsc {

/// Cluster vectors found so far; columns[l] holds c^(l+1) for every frame.
struct EmbeddingSequence {
  std::size_t n = 0;
  std::size_t t_len = 0;
  std::vector<StackedVector> columns;

  std::size_t m() const noexcept { return columns.size(); }
  /// n x m matrix of frame t.
  Eigen::MatrixXd frame(std::size_t t) const;
};

struct KMeansOptions {
  int restarts = 50;
  int max_iters = 300;
  kernels::Backend backend = kernels::Backend::parallel;
};

struct KMeansResult {
  std::vector<int> assignment;
  double inertia = 0.0;
};

/// Lloyd iterations from k-means++ seeding, best of `restarts` by
/// within-cluster sum of squares (earliest restart wins ties). Restart r
/// draws from substream(seed, r). Throws std::invalid_argument if k > n or
/// k < 1.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                    const KMeansOptions& options = {});

/// Renames the labels of `cur` to agree with `prev` as much as possible
/// (maximum-weight matching of the k x k overlap table). The partition
/// itself is not changed.
std::vector<int> align_labels(std::span<const int> prev, std::span<const int> cur, int k);

/// Per-frame spectral clustering: k smallest eigenvectors of L_t, rows
/// clustered with kmeans (frame t seeded by substream(seed, t)), frames
/// then aligned to their predecessor for presentation.
LabelSequence static_sc(const TVGraphSequence& seq, int k, std::uint64_t seed);

/// Per-frame eigenvector number `index` (0 = smallest) projected off the
/// basis directions and scaled to squared norm N; consecutive frames are
/// sign-aligned so that c_t^T c_{t-1} >= 0.
StackedVector spectral_warm_start(std::span<const Laplacian> blocks,
                                  const OrthogonalityBasis& basis, std::size_t index);

struct TwoWayResult {
  LabelSequence labels;
  SolveResult solve;
};

/// One temporal cluster vector with the all-ones slab; node i at frame t
/// gets label 0 when [c_t]_i >= 0 and 1 otherwise.
TwoWayResult tv_cluster_two(const TVGraphSequence& seq, const SolverConfig& cfg);

/// Polarity labels of a stacked vector.
LabelSequence polarity_labels(const StackedVector& c);

struct MultiWayResult {
  LabelSequence labels;
  EmbeddingSequence embedding;
  std::vector<SolveResult> solves;
};

/// k - 1 temporal cluster vectors by deflation, then per-frame kmeans on the
/// n x (k - 1) embedding and frame-to-frame label alignment.
MultiWayResult tv_cluster_multi(const TVGraphSequence& seq, int k, const SolverConfig& cfg);

}  // namespace tvsc
