#include "tvsc/metrics.hpp"

#include <stdexcept>
#include <string>

#include "tvsc/clustering.hpp"

namespace tvsc {

double pair_accuracy(std::span<const int> est, std::span<const int> truth) {
  if (est.size() != truth.size()) {
    throw std::invalid_argument("pair_accuracy: label vectors differ in length");
  }
  const std::size_t n = est.size();
  if (n < 2) throw std::invalid_argument("pair_accuracy: need at least two nodes");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      agree += (est[i] == est[j]) == (truth[i] == truth[j]) ? 1 : 0;
    }
  }
  // Unordered pairs counted once; the ordered count is twice this.
  return static_cast<double>(2 * agree) / static_cast<double>(n * (n - 1));
}

std::size_t mismatch_count(std::span<const int> labels_t, std::span<const int> labels_prev) {
  if (labels_t.size() != labels_prev.size()) {
    throw std::invalid_argument("mismatch_count: label vectors differ in length");
  }
  std::size_t c = 0;
  for (std::size_t i = 0; i < labels_t.size(); ++i) c += labels_t[i] != labels_prev[i] ? 1 : 0;
  return c;
}

double ratiocut(const WeightedGraph& g, std::span<const int> labels, int k) {
  if (labels.size() != g.n()) throw std::invalid_argument("ratiocut: label count != node count");
  if (k < 1) throw std::invalid_argument("ratiocut: k must be positive");
  std::vector<std::size_t> size(static_cast<std::size_t>(k), 0);
  for (int l : labels) {
    if (l < 0 || l >= k) throw std::invalid_argument("ratiocut: label outside [0, k)");
    ++size[static_cast<std::size_t>(l)];
  }
  std::vector<double> cut(static_cast<std::size_t>(k), 0.0);
  for (const Edge& e : g.edges()) {
    const int a = labels[e.i], b = labels[e.j];
    if (a != b) {
      cut[static_cast<std::size_t>(a)] += e.w;
      cut[static_cast<std::size_t>(b)] += e.w;
    }
  }
  double total = 0.0;
  for (std::size_t l = 0; l < size.size(); ++l) {
    if (size[l] == 0) {
      throw std::invalid_argument("ratiocut: cluster " + std::to_string(l) + " is empty");
    }
    total += cut[l] / static_cast<double>(size[l]);
  }
  return total;
}

std::vector<double> eigengap_profile(const Laplacian& L, std::size_t m) {
  const EigenPairs ep = smallest_eigenvectors(L, m);
  std::vector<double> gaps;
  gaps.reserve(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) gaps.push_back(ep.values[i + 1] - ep.values[i]);
  return gaps;
}

std::vector<std::size_t> aligned_mismatches(const LabelSequence& labels) {
  std::vector<std::size_t> out;
  if (labels.t_len() < 2) return out;
  std::vector<int> prev(labels.frame(0).begin(), labels.frame(0).end());
  for (std::size_t t = 1; t < labels.t_len(); ++t) {
    std::vector<int> cur = align_labels(prev, labels.frame(t), labels.k());
    out.push_back(mismatch_count(cur, prev));
    prev = std::move(cur);
  }
  return out;
}

AccuracyReport evaluate(const LabelSequence& est, const LabelSequence& truth) {
  if (est.n() != truth.n() || est.t_len() != truth.t_len()) {
    throw std::invalid_argument("evaluate: estimate is " + std::to_string(est.t_len()) + "x" +
                                std::to_string(est.n()) + ", truth is " +
                                std::to_string(truth.t_len()) + "x" + std::to_string(truth.n()));
  }
  AccuracyReport r;
  r.per_frame.reserve(est.t_len());
  double sum = 0.0;
  for (std::size_t t = 0; t < est.t_len(); ++t) {
    r.per_frame.push_back(pair_accuracy(est.frame(t), truth.frame(t)));
    sum += r.per_frame.back();
  }
  r.mean = sum / static_cast<double>(est.t_len());
  r.mismatch_per_frame = aligned_mismatches(est);
  return r;
}

}  // namespace tvsc
