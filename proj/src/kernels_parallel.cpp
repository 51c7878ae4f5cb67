#include <omp.h>

#include <algorithm>
#include <vector>

#include "frame_ops.hpp"
#include "tvsc/kernels.hpp"

namespace tvsc::kernels {

namespace parallel {

namespace {

// Frames are summed in order after the parallel per-frame pass.
double ordered_sum(const std::vector<double>& parts) {
  double s = 0.0;
  for (double p : parts) s += p;
  return s;
}

}  // namespace

void block_apply(std::span<const Laplacian> blocks, std::span<const double> x,
                 std::span<double> y) {
  std::vector<std::size_t> offsets(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) offsets[b + 1] = offsets[b] + blocks[b].n();
  const auto count = static_cast<std::ptrdiff_t>(blocks.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < count; ++b) {
    const Laplacian& L = blocks[b];
    L.apply(x.subspan(offsets[b], L.n()), y.subspan(offsets[b], L.n()));
  }
}

double half_inner_sum(std::span<const double> x, std::span<const double> y, std::size_t n,
                      std::size_t t_len) {
  std::vector<double> parts(t_len);
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    parts[t] = detail::frame_half_inner(x.data() + t * n, y.data() + t * n, n);
  }
  return ordered_sum(parts);
}

double temporal_l1(std::span<const double> x, std::size_t n, std::size_t t_len) {
  if (t_len < 2) return 0.0;
  std::vector<double> parts(t_len - 1);
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 1; t < frames; ++t) {
    parts[t - 1] = detail::frame_l1_diff(x.data() + t * n, x.data() + (t - 1) * n, n);
  }
  return ordered_sum(parts);
}

void temporal_diff(std::span<const double> x, std::span<double> out, std::size_t n,
                   std::size_t t_len) {
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    detail::frame_diff(x.data() + t * n, out.data() + t * n, n, static_cast<std::size_t>(t));
  }
}

void temporal_diff_adjoint(std::span<const double> d, std::span<double> out, std::size_t n,
                           std::size_t t_len) {
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    detail::frame_diff_adjoint(d.data() + t * n, out.data() + t * n, n,
                               static_cast<std::size_t>(t), t_len);
  }
}

std::size_t project_sphere(std::span<double> z, std::size_t n, std::size_t t_len, double target) {
  long degenerate = 0;
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel for schedule(static) reduction(+ : degenerate)
  for (std::ptrdiff_t t = 0; t < frames; ++t) {
    if (!detail::frame_project_sphere(z.data() + t * n, n, target)) ++degenerate;
  }
  return static_cast<std::size_t>(degenerate);
}

void slab_dual_update(std::span<double> d1, std::span<const double> cbar, FrameDirections dirs,
                      std::size_t n, std::size_t t_len, double gamma, double eps) {
  const auto frames = static_cast<std::ptrdiff_t>(t_len);
#pragma omp parallel
  {
    std::vector<double> scratch(n);
#pragma omp for schedule(static)
    for (std::ptrdiff_t t = 0; t < frames; ++t) {
      detail::frame_slab_dual(d1.data() + t * n, cbar.data() + t * n, scratch.data(), n, dirs,
                              static_cast<std::size_t>(t), t_len, gamma, eps);
    }
  }
}

void l1_dual_update(std::span<double> d2, std::span<const double> phi_cbar, double gamma,
                    double alpha) {
  const auto size = static_cast<std::ptrdiff_t>(d2.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    d2[i] = std::clamp(d2[i] + gamma * phi_cbar[i], -alpha, alpha);
  }
}

double assign_nearest(std::span<const double> points, std::span<const double> centers,
                      std::size_t n, std::size_t m, std::size_t k, std::span<int> assignment,
                      std::span<double> sq_dist) {
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    detail::point_nearest(points.data() + i * m, centers.data(), m, k, assignment[i], sq_dist[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += sq_dist[i];
  return total;
}

}  // namespace parallel

const KernelSet& kernel_set(Backend backend) noexcept {
  static const KernelSet serial_set{
      serial::block_apply,    serial::half_inner_sum,   serial::temporal_l1,
      serial::temporal_diff,  serial::temporal_diff_adjoint, serial::project_sphere,
      serial::slab_dual_update, serial::l1_dual_update, serial::assign_nearest,
  };
  static const KernelSet parallel_set{
      parallel::block_apply,    parallel::half_inner_sum,   parallel::temporal_l1,
      parallel::temporal_diff,  parallel::temporal_diff_adjoint, parallel::project_sphere,
      parallel::slab_dual_update, parallel::l1_dual_update, parallel::assign_nearest,
  };
  return backend == Backend::serial ? serial_set : parallel_set;
}

}  // namespace tvsc::kernels
