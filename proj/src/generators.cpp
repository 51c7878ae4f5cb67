#include "tvsc/generators.hpp"

#include <stdexcept>
#include <vector>

namespace tvsc {

void SbmTvParams::validate() const {
  if (k < 2) throw std::invalid_argument("SBM: k must be at least 2");
  if (n_per_cluster < 1) throw std::invalid_argument("SBM: n_per_cluster must be positive");
  if (t_len < 1) throw std::invalid_argument("SBM: t_len must be at least 1");
  if (!(p_inter >= 0.0 && p_inter <= p_intra && p_intra <= 1.0)) {
    throw std::invalid_argument("SBM: need 0 <= p_inter <= p_intra <= 1");
  }
  if (!(flip_prob >= 0.0 && flip_prob <= 1.0)) {
    throw std::invalid_argument("SBM: flip_prob must lie in [0, 1]");
  }
}

WeightedGraph sbm_static(std::span<const int> labels, double p_intra, double p_inter, Rng& rng) {
  const std::size_t n = labels.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = labels[i] == labels[j] ? p_intra : p_inter;
      if (rng.uniform() < p) edges.push_back({i, j, 1.0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

std::pair<TVGraphSequence, LabelSequence> sbm_tv_sequence(const SbmTvParams& params) {
  params.validate();
  const std::size_t n = params.n_per_cluster * static_cast<std::size_t>(params.k);
  const std::size_t T = params.t_len;
  LabelSequence labels(n, T, params.k);

  for (std::size_t i = 0; i < n; ++i) {
    labels.frame(0)[i] = static_cast<int>(i / params.n_per_cluster);
  }
  for (std::size_t t = 1; t < T; ++t) {
    Rng rng = substream(params.seed, 2 * t);
    auto prev = labels.frame(t - 1);
    auto cur = labels.frame(t);
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = prev[i];
      if (rng.uniform() < params.flip_prob) {
        // Draw from the k - 1 other clusters.
        const auto r = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(params.k - 1)));
        cur[i] = r >= prev[i] ? r + 1 : r;
      }
    }
  }

  std::vector<WeightedGraph> graphs(T);
  const auto frames = static_cast<std::ptrdiff_t>(T);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    Rng rng = substream(params.seed, 2 * static_cast<std::uint64_t>(t) + 1);
    graphs[t] = sbm_static(labels.frame(t), params.p_intra, params.p_inter, rng);
  }
  return {TVGraphSequence(std::move(graphs)), std::move(labels)};
}

}  // namespace tvsc
