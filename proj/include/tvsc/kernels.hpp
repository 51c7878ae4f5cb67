#pragma once

// Data-parallel inner loops of the solver and of k-means.
//
// Two implementations share one signature set: `serial` is the reference
// kept for testing, `parallel` distributes frames (or points) over OpenMP
// threads. Every reduction is done per frame in index order and then summed
// across frames in frame order, so both backends return bitwise-identical
// results for the same input regardless of thread count.

#include "tvsc/graph.hpp"

#include <cstddef>
#include <span>

namespace tvsc::kernels {

enum class Backend { serial, parallel };

/// Orthonormal per-frame constraint directions, direction-major:
/// direction l, frame t occupies [(l*T + t)*N, (l*T + t + 1)*N).
struct FrameDirections {
  std::span<const double> data;
  std::size_t count = 0;
};

struct KernelSet {
  /// y_t = L_t x_t for every frame.
  void (*block_apply)(std::span<const Laplacian> blocks, std::span<const double> x,
                      std::span<double> y);
  /// Per-frame 1/2 x_t^T y_t summed over frames (y = Lx precomputed).
  double (*half_inner_sum)(std::span<const double> x, std::span<const double> y,
                           std::size_t n, std::size_t t_len);
  /// sum_t ||x_t - x_{t-1}||_1 for t >= 1.
  double (*temporal_l1)(std::span<const double> x, std::size_t n, std::size_t t_len);
  /// out = Phi x.
  void (*temporal_diff)(std::span<const double> x, std::span<double> out, std::size_t n,
                        std::size_t t_len);
  /// out = Phi^T d.
  void (*temporal_diff_adjoint)(std::span<const double> d, std::span<double> out,
                                std::size_t n, std::size_t t_len);
  /// Scales each frame of z to squared norm `target`. Frames with zero norm
  /// are left unchanged; returns the number of such frames.
  std::size_t (*project_sphere)(std::span<double> z, std::size_t n, std::size_t t_len,
                                double target);
  /// d1 <- y - gamma * P(y / gamma) with y = d1 + gamma * cbar, where P is the
  /// sequential projection onto the slabs |x^T v| <= eps of every direction.
  void (*slab_dual_update)(std::span<double> d1, std::span<const double> cbar,
                           FrameDirections dirs, std::size_t n, std::size_t t_len,
                           double gamma, double eps);
  /// d2 <- clip(d2 + gamma * phi_cbar, -alpha, alpha).
  void (*l1_dual_update)(std::span<double> d2, std::span<const double> phi_cbar,
                         double gamma, double alpha);
  /// k-means assignment step over row-major points (n x m) and centers
  /// (k x m). Writes nearest center (lowest index on ties) and squared
  /// distance per point; returns the summed distance in point order.
  double (*assign_nearest)(std::span<const double> points, std::span<const double> centers,
                           std::size_t n, std::size_t m, std::size_t k,
                           std::span<int> assignment, std::span<double> sq_dist);
};

namespace serial {
void block_apply(std::span<const Laplacian> blocks, std::span<const double> x,
                 std::span<double> y);
double half_inner_sum(std::span<const double> x, std::span<const double> y, std::size_t n,
                      std::size_t t_len);
double temporal_l1(std::span<const double> x, std::size_t n, std::size_t t_len);
void temporal_diff(std::span<const double> x, std::span<double> out, std::size_t n,
                   std::size_t t_len);
void temporal_diff_adjoint(std::span<const double> d, std::span<double> out, std::size_t n,
                           std::size_t t_len);
std::size_t project_sphere(std::span<double> z, std::size_t n, std::size_t t_len,
                           double target);
void slab_dual_update(std::span<double> d1, std::span<const double> cbar, FrameDirections dirs,
                      std::size_t n, std::size_t t_len, double gamma, double eps);
void l1_dual_update(std::span<double> d2, std::span<const double> phi_cbar, double gamma,
                    double alpha);
double assign_nearest(std::span<const double> points, std::span<const double> centers,
                      std::size_t n, std::size_t m, std::size_t k, std::span<int> assignment,
                      std::span<double> sq_dist);
}  // namespace serial

namespace parallel {
void block_apply(std::span<const Laplacian> blocks, std::span<const double> x,
                 std::span<double> y);
double half_inner_sum(std::span<const double> x, std::span<const double> y, std::size_t n,
                      std::size_t t_len);
double temporal_l1(std::span<const double> x, std::size_t n, std::size_t t_len);
void temporal_diff(std::span<const double> x, std::span<double> out, std::size_t n,
                   std::size_t t_len);
void temporal_diff_adjoint(std::span<const double> d, std::span<double> out, std::size_t n,
                           std::size_t t_len);
std::size_t project_sphere(std::span<double> z, std::size_t n, std::size_t t_len,
                           double target);
void slab_dual_update(std::span<double> d1, std::span<const double> cbar, FrameDirections dirs,
                      std::size_t n, std::size_t t_len, double gamma, double eps);
void l1_dual_update(std::span<double> d2, std::span<const double> phi_cbar, double gamma,
                    double alpha);
double assign_nearest(std::span<const double> points, std::span<const double> centers,
                      std::size_t n, std::size_t m, std::size_t k, std::span<int> assignment,
                      std::span<double> sq_dist);
}  // namespace parallel

const KernelSet& kernel_set(Backend backend) noexcept;

}  // namespace tvsc::kernels
