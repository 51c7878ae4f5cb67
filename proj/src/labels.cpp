#include "tvsc/labels.hpp"

#include <stdexcept>
#include <string>

namespace tvsc {

LabelSequence::LabelSequence(std::size_t n, std::size_t t_len, int k, std::vector<int> labels)
    : n_(n), t_len_(t_len), k_(k), labels_(std::move(labels)) {
  if (labels_.size() != n_ * t_len_) {
    throw std::invalid_argument("LabelSequence: expected " + std::to_string(n_ * t_len_) +
                                " labels, got " + std::to_string(labels_.size()));
  }
  for (int l : labels_) {
    if (l < 0 || l >= k_) {
      throw std::invalid_argument("LabelSequence: label " + std::to_string(l) +
                                  " outside [0, " + std::to_string(k_) + ")");
    }
  }
}

}  // namespace tvsc
