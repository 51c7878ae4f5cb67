#include <doctest.h>

#include "oracles.hpp"
#include "tvsc/metrics.hpp"

using namespace tvsc;

TEST_CASE("pair-counting accuracy") {
  const std::vector<int> four{0, 1, 1, 2};
  CHECK(pair_accuracy(four, four) == 1.0);
  CHECK(pair_accuracy(std::vector<int>{2, 0, 0, 1}, four) == 1.0);
  CHECK(pair_accuracy(std::vector<int>{0, 1, 1}, std::vector<int>{0, 0, 1}) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(pair_accuracy(std::vector<int>{0}, std::vector<int>{0}), std::invalid_argument);
  CHECK_THROWS_AS(pair_accuracy(four, std::vector<int>{0, 1}), std::invalid_argument);

  Rng rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rng.uniform_index(29);
    std::vector<int> a(n), b(n);
    for (int& x : a) x = static_cast<int>(rng.uniform_index(4));
    for (int& x : b) x = static_cast<int>(rng.uniform_index(4));
    CHECK(pair_accuracy(a, b) == oracle::pair_accuracy_brute(a, b));
  }
}

TEST_CASE("mismatch count") {
  const std::vector<int> a{0, 1, 2, 0};
  CHECK(mismatch_count(a, a) == 0);
  CHECK(mismatch_count(std::vector<int>{0, 1, 2, 1}, a) == 1);
  Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<int> x(15), y(15);
    for (int& v : x) v = static_cast<int>(rng.uniform_index(3));
    for (int& v : y) v = static_cast<int>(rng.uniform_index(3));
    std::size_t ref = 0;
    for (std::size_t i = 0; i < 15; ++i) ref += x[i] != y[i];
    CHECK(mismatch_count(x, y) == ref);
  }
}

TEST_CASE("ratio cut") {
  const WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(ratiocut(split, std::vector<int>{0, 0, 1, 1}, 2) == 0.0);
  const WeightedGraph bridged(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  CHECK(ratiocut(bridged, std::vector<int>{0, 0, 1, 1}, 2) == doctest::Approx(1.0));
  CHECK(ratiocut(bridged, std::vector<int>{0, 0, 0, 0}, 1) == 0.0);
  CHECK_THROWS_AS(ratiocut(bridged, std::vector<int>{0, 0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("eigengap profile") {
  std::vector<Edge> k5;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) k5.push_back({i, j, 1.0});
  }
  const auto g = eigengap_profile(Laplacian(WeightedGraph(5, k5)), 5);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == doctest::Approx(5.0));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(g[i]) < 1e-10);

  const WeightedGraph two(6, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}, {3, 5, 1.0}, {4, 5, 1.0}});
  CHECK(std::abs(eigengap_profile(Laplacian(two), 3)[0]) < 1e-10);
  CHECK(eigengap_profile(Laplacian(two), 2).size() == 1);
}

TEST_CASE("sequence evaluation") {
  const LabelSequence truth(4, 3, 2, {0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1});
  const LabelSequence est(4, 3, 2, {1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0});
  const AccuracyReport r = evaluate(est, truth);
  for (double a : r.per_frame) CHECK(a == 1.0);
  CHECK(r.mean == 1.0);
  // After renaming, frame 1 agrees with frame 0 and frame 2 moves one node.
  CHECK(r.mismatch_per_frame == std::vector<std::size_t>{0, 1});
  CHECK(aligned_mismatches(truth) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(evaluate(LabelSequence(4, 2, 2), truth), std::invalid_argument);
}
