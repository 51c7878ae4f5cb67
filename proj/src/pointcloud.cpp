#include "tvsc/pointcloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "tvsc/rng.hpp"

namespace tvsc {

namespace {

double sq_distance(const Point3& a, const Point3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

double parse_double(std::string_view field, const std::filesystem::path& file, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw std::runtime_error(file.string() + ":" + std::to_string(line) + ": non-numeric field '" +
                             std::string(field) + "'");
  }
  return v;
}

std::vector<Point3> read_frame(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::vector<Point3> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Point3 p{};
    std::string_view rest(line);
    for (int c = 0; c < 3; ++c) {
      const auto comma = rest.find(',');
      if ((c < 2) == (comma == std::string_view::npos)) {
        throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                 ": expected 3 comma-separated fields");
      }
      p[c] = parse_double(rest.substr(0, comma), file, lineno);
      if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

PointFrameSequence::PointFrameSequence(std::vector<std::vector<Point3>> frames)
    : frames_(std::move(frames)) {
  if (frames_.empty()) throw std::invalid_argument("no frames found");
  const std::size_t n = frames_.front().size();
  for (std::size_t t = 0; t < frames_.size(); ++t) {
    if (frames_[t].size() != n) {
      throw std::invalid_argument("inconsistent point count: frame " + std::to_string(t) + " has " +
                                  std::to_string(frames_[t].size()) + " points, expected " +
                                  std::to_string(n));
    }
    for (const auto& p : frames_[t]) {
      if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !std::isfinite(p[2])) {
        throw std::invalid_argument("non-finite coordinate in frame " + std::to_string(t));
      }
    }
  }
}

PointFrameSequence load_frames(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  if (files.empty()) throw std::invalid_argument("no frames found in " + dir.string());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  std::vector<std::vector<Point3>> frames;
  frames.reserve(files.size());
  for (const auto& f : files) frames.push_back(read_frame(f));
  return PointFrameSequence(std::move(frames));
}

std::vector<std::size_t> farthest_point_indices(const std::vector<Point3>& points,
                                                std::size_t target_n, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (target_n == 0 || target_n > n) {
    throw std::invalid_argument("downsample: target_n " + std::to_string(target_n) +
                                " must lie in [1, " + std::to_string(n) + "]");
  }
  std::vector<std::size_t> chosen;
  chosen.reserve(target_n);
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(n, false);
  Rng rng(seed);
  std::size_t next = rng.uniform_index(n);
  for (std::size_t s = 0; s < target_n; ++s) {
    chosen.push_back(next);
    taken[next] = true;
    std::size_t arg = n;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      dist[i] = std::min(dist[i], sq_distance(points[i], points[next]));
      if (!taken[i] && dist[i] > best) {
        best = dist[i];
        arg = i;
      }
    }
    next = arg;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

PointFrameSequence downsample(const PointFrameSequence& seq, std::size_t target_n,
                              std::uint64_t seed) {
  const auto idx = farthest_point_indices(seq[0], target_n, seed);
  std::vector<std::vector<Point3>> frames(seq.t_len());
  for (std::size_t t = 0; t < seq.t_len(); ++t) {
    frames[t].reserve(idx.size());
    for (auto i : idx) frames[t].push_back(seq[t][i]);
  }
  return PointFrameSequence(std::move(frames));
}

WeightedGraph knn_graph(const std::vector<Point3>& points, std::size_t k) {
  const std::size_t n = points.size();
  if (k == 0 || k >= n) {
    throw std::invalid_argument("knn_graph: k = " + std::to_string(k) + " must lie in [1, n - 1] with n = " +
                                std::to_string(n));
  }
  // adjacency[i] holds the k nearest neighbours of i.
  std::vector<std::vector<std::size_t>> nearest(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) cand.emplace_back(sq_distance(points[i], points[j]), j);
    }
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
    for (std::size_t r = 0; r < k; ++r) nearest[i].push_back(cand[r].second);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : nearest[i]) pairs.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j] : pairs) edges.push_back({i, j, 1.0});
  return WeightedGraph(n, std::move(edges));
}

TVGraphSequence knn_sequence(const PointFrameSequence& seq, std::size_t k) {
  std::vector<WeightedGraph> graphs;
  graphs.reserve(seq.t_len());
  for (const auto& frame : seq.frames()) graphs.push_back(knn_graph(frame, k));
  return TVGraphSequence(std::move(graphs));
}

}  // namespace tvsc
