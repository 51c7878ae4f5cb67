#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tvsc {

/// T frames of N integer labels in [0, K).
class LabelSequence {
 public:
  LabelSequence() = default;
  LabelSequence(std::size_t n, std::size_t t_len, int k)
      : n_(n), t_len_(t_len), k_(k), labels_(n * t_len, 0) {}
  /// Throws std::invalid_argument on size mismatch or labels outside [0, k).
  LabelSequence(std::size_t n, std::size_t t_len, int k, std::vector<int> labels);

  std::size_t n() const noexcept { return n_; }
  std::size_t t_len() const noexcept { return t_len_; }
  int k() const noexcept { return k_; }

  std::span<int> frame(std::size_t t) { return {labels_.data() + t * n_, n_}; }
  std::span<const int> frame(std::size_t t) const { return {labels_.data() + t * n_, n_}; }
  std::span<const int> values() const noexcept { return labels_; }

  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t t_len_ = 0;
  int k_ = 0;
  std::vector<int> labels_;
};

}  // namespace tvsc
