#pragma once

// Seeded stochastic-block-model sequences with planted, slowly drifting
// labels.

#include <cstdint>
#include <span>
#include <utility>

#include "tvsc/graph.hpp"
#include "tvsc/labels.hpp"
#include "tvsc/rng.hpp"

namespace tvsc {

struct SbmTvParams {
  std::size_t n_per_cluster = 50;
  int k = 3;
  std::size_t t_len = 100;
  double p_intra = 0.3;
  double p_inter = 0.2;
  double flip_prob = 0.01;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when the parameter invariants fail.
  void validate() const;

  static SbmTvParams dense() { return {}; }
  static SbmTvParams sparse() {
    SbmTvParams p;
    p.p_intra = 0.1;
    p.p_inter = 0.05;
    return p;
  }
};

/// Unit-weight edge on each pair i < j with probability p_intra when the
/// labels match and p_inter otherwise. Pairs are visited in (i, j) order,
/// one uniform draw each.
WeightedGraph sbm_static(std::span<const int> labels, double p_intra, double p_inter, Rng& rng);

/// Frame 0 carries the equisized planted partition (node i in cluster
/// i / n_per_cluster). Each later frame copies the previous labels and, with
/// probability flip_prob per node, moves the node to one of the other k - 1
/// clusters uniformly. Every frame's edges are drawn afresh.
///
/// Randomness: frame t uses substream(seed, 2t) for label flips and
/// substream(seed, 2t + 1) for edges, so frames can be drawn in parallel.
std::pair<TVGraphSequence, LabelSequence> sbm_tv_sequence(const SbmTvParams& params);

}  // namespace tvsc
