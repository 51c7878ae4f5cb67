#pragma once

// Evaluation of estimated partitions against ground truth and against
// their own temporal history.

#include <cstddef>
#include <span>
#include <vector>

#include "tvsc/graph.hpp"
#include "tvsc/labels.hpp"

namespace tvsc {

/// Fraction of ordered pairs (i != j) on which the two partitions agree
/// about co-membership. Streams over pairs; no n x n matrix is built.
/// Throws std::invalid_argument if n < 2 or the lengths differ.
double pair_accuracy(std::span<const int> est, std::span<const int> truth);

/// Number of nodes whose label differs. Labels are compared as given.
std::size_t mismatch_count(std::span<const int> labels_t, std::span<const int> labels_prev);

/// sum_l cut(A_l, complement) / |A_l|. Throws std::invalid_argument if any
/// of the k clusters is empty.
double ratiocut(const WeightedGraph& g, std::span<const int> labels, int k);

/// lambda_{i+1} - lambda_i for the m smallest Laplacian eigenvalues.
std::vector<double> eigengap_profile(const Laplacian& L, std::size_t m);

struct AccuracyReport {
  std::vector<double> per_frame;
  double mean = 0.0;
  /// Mismatches of the estimate between consecutive frames after alignment.
  std::vector<std::size_t> mismatch_per_frame;
};

/// Throws std::invalid_argument when the sequences differ in shape.
AccuracyReport evaluate(const LabelSequence& est, const LabelSequence& truth);

/// Aligns every frame to its (already aligned) predecessor and returns the
/// per-transition mismatch counts (length T - 1).
std::vector<std::size_t> aligned_mismatches(const LabelSequence& labels);

}  // namespace tvsc
