#pragma once

// Primal-dual splitting for temporally regularized spectral clustering.
//
// The solver minimizes, over frame-stacked c = [c_1; ...; c_T],
//
//   1/2 sum_t c_t^T L_t c_t + alpha * sum_{t>=2} ||c_t - c_{t-1}||_1
//
// subject to ||c_t||^2 = N and |c_t^T v| <= eps for every constraint
// direction v of frame t. The sphere constraint is handled by the primal
// prox, the slabs and the l1 term by dual variables d1 (identity block) and
// d2 (temporal-difference block).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tvsc/graph.hpp"
#include "tvsc/kernels.hpp"

namespace tvsc {

struct SolverConfig {
  double alpha = 1.0;
  /// Defaults: gamma1 = 0.25 / beta, gamma2 = 0.7 * beta, beta = lambda_max(L);
  /// both satisfy 1/gamma1 - 5 gamma2 = beta / 2.
  std::optional<double> gamma1;
  std::optional<double> gamma2;
  /// Default: 1e-6 * sqrt(N).
  std::optional<double> epsilon;
  double sigma = 1e-5;
  int max_iters = 20000;
  int restarts = 1;
  std::uint64_t seed = 0;
  kernels::Backend backend = kernels::Backend::parallel;

  /// Throws std::invalid_argument on nonpositive steps, negative alpha, etc.
  void validate() const;
};

/// Per-frame orthonormal constraint directions for one deflation level.
class OrthogonalityBasis {
 public:
  OrthogonalityBasis() = default;
  OrthogonalityBasis(std::size_t n, std::size_t t_len) : n_(n), t_len_(t_len) {}

  /// The all-ones direction (normalized) in every frame.
  static OrthogonalityBasis ones(std::size_t n, std::size_t t_len);

  /// Appends c after Gram-Schmidt against the existing directions of each
  /// frame, normalized to unit length. Throws std::invalid_argument if a
  /// frame of c lies (numerically) in the span of the existing directions.
  void add_direction(const StackedVector& c);

  std::size_t n() const noexcept { return n_; }
  std::size_t t_len() const noexcept { return t_len_; }
  std::size_t count() const noexcept { return directions_.size(); }
  std::span<const double> direction(std::size_t l, std::size_t t) const {
    return directions_[l].frame(t);
  }
  /// Packed copy in the layout the kernels expect.
  std::vector<double> packed() const;

 private:
  std::size_t n_ = 0;
  std::size_t t_len_ = 0;
  std::vector<StackedVector> directions_;
};

struct SolveResult {
  StackedVector c;
  StackedVector d1;
  StackedVector d2;
  int iters = 0;
  bool converged = false;
  std::vector<double> objective_trace;
  double final_objective = 0.0;
  /// Largest |c_t^T v| of the raw iterate, before the final feasibility
  /// restoration.
  double raw_slab_violation = 0.0;
  double beta = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double epsilon = 0.0;
  int restart = 0;
};

/// sqrt(N / ||z||^2) * z with N = z.size(). Throws std::invalid_argument for z = 0.
std::vector<double> prox_sphere(std::span<const double> z);

/// Euclidean projection onto {x : |x^T v| <= eps}. Throws std::invalid_argument for v = 0.
std::vector<double> prox_slab(std::span<const double> z, std::span<const double> v, double eps);

/// sgn(z_i) * max(0, |z_i| - tau).
std::vector<double> soft_threshold(std::span<const double> z, double tau);

/// prox_{scale * f}(z) for some function f.
using ProxFn = std::function<std::vector<double>(std::span<const double> z, double scale)>;

/// prox_{gamma f*}(z) = z - gamma * prox_{f / gamma}(z / gamma).
std::vector<double> prox_conjugate(const ProxFn& prox_of_f, double gamma, std::span<const double> z);

/// 1/2 c^T L c + alpha * ||Phi c||_1.
double tv_objective(std::span<const Laplacian> blocks, const StackedVector& c, double alpha);

/// Runs the primal-dual iteration from `init` (restart 0) and from seeded
/// Gaussian starts (restarts 1..cfg.restarts-1); returns the run with the
/// lowest final objective. The returned c is made exactly feasible by
/// projecting each frame onto the orthogonal complement of its constraint
/// directions and rescaling to ||c_t||^2 = N.
///
/// Throws std::invalid_argument on shape mismatches or a violated step-size
/// condition 1/gamma1 - 5 gamma2 >= beta / 2, and std::runtime_error when the
/// iterate becomes non-finite.
SolveResult pds_solve(std::span<const Laplacian> blocks, const OrthogonalityBasis& basis,
                      const SolverConfig& cfg, const StackedVector& init);

}  // namespace tvsc
