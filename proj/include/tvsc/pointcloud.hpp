#pragma once

// Registered dynamic point clouds and their per-frame k-NN graphs.

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "tvsc/graph.hpp"

namespace tvsc {

using Point3 = std::array<double, 3>;

/// Frames of equally many points; point i is the same physical point in
/// every frame.
class PointFrameSequence {
 public:
  PointFrameSequence() = default;
  /// Throws std::invalid_argument on empty input, unequal frame sizes
  /// ("inconsistent point count"), or non-finite coordinates.
  explicit PointFrameSequence(std::vector<std::vector<Point3>> frames);

  std::size_t n() const noexcept { return frames_.empty() ? 0 : frames_.front().size(); }
  std::size_t t_len() const noexcept { return frames_.size(); }
  const std::vector<Point3>& operator[](std::size_t t) const { return frames_[t]; }
  const std::vector<std::vector<Point3>>& frames() const noexcept { return frames_; }

 private:
  std::vector<std::vector<Point3>> frames_;
};

/// Reads every `*.csv` in `dir` in lexicographic filename order; one `x,y,z`
/// point per line, no header. Throws std::runtime_error on I/O or parse
/// failures and std::invalid_argument on shape problems.
PointFrameSequence load_frames(const std::filesystem::path& dir);

/// Farthest-point sampling on frame 0 from a seeded start point. Returns the
/// chosen indices in ascending order.
std::vector<std::size_t> farthest_point_indices(const std::vector<Point3>& points,
                                                std::size_t target_n, std::uint64_t seed);

/// Keeps the same farthest-point subset in every frame so registration is
/// preserved. Throws std::invalid_argument if target_n > n or target_n == 0.
PointFrameSequence downsample(const PointFrameSequence& seq, std::size_t target_n,
                              std::uint64_t seed);

/// Directed k-NN by Euclidean distance (ties to the lower index), OR-
/// symmetrized, unit weights. Throws std::invalid_argument if k >= n or k == 0.
WeightedGraph knn_graph(const std::vector<Point3>& points, std::size_t k);

/// knn_graph applied to every frame.
TVGraphSequence knn_sequence(const PointFrameSequence& seq, std::size_t k);

}  // namespace tvsc
