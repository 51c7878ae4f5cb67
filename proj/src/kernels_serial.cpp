#include <algorithm>
#include <vector>

#include "frame_ops.hpp"
#include "tvsc/kernels.hpp"

namespace tvsc::kernels::serial {

void block_apply(std::span<const Laplacian> blocks, std::span<const double> x,
                 std::span<double> y) {
  std::size_t offset = 0;
  for (const Laplacian& L : blocks) {
    L.apply(x.subspan(offset, L.n()), y.subspan(offset, L.n()));
    offset += L.n();
  }
}

double half_inner_sum(std::span<const double> x, std::span<const double> y, std::size_t n,
                      std::size_t t_len) {
  double s = 0.0;
  for (std::size_t t = 0; t < t_len; ++t) {
    s += detail::frame_half_inner(x.data() + t * n, y.data() + t * n, n);
  }
  return s;
}

double temporal_l1(std::span<const double> x, std::size_t n, std::size_t t_len) {
  double s = 0.0;
  for (std::size_t t = 1; t < t_len; ++t) {
    s += detail::frame_l1_diff(x.data() + t * n, x.data() + (t - 1) * n, n);
  }
  return s;
}

void temporal_diff(std::span<const double> x, std::span<double> out, std::size_t n,
                   std::size_t t_len) {
  for (std::size_t t = 0; t < t_len; ++t) {
    detail::frame_diff(x.data() + t * n, out.data() + t * n, n, t);
  }
}

void temporal_diff_adjoint(std::span<const double> d, std::span<double> out, std::size_t n,
                           std::size_t t_len) {
  for (std::size_t t = 0; t < t_len; ++t) {
    detail::frame_diff_adjoint(d.data() + t * n, out.data() + t * n, n, t, t_len);
  }
}

std::size_t project_sphere(std::span<double> z, std::size_t n, std::size_t t_len, double target) {
  std::size_t degenerate = 0;
  for (std::size_t t = 0; t < t_len; ++t) {
    if (!detail::frame_project_sphere(z.data() + t * n, n, target)) ++degenerate;
  }
  return degenerate;
}

void slab_dual_update(std::span<double> d1, std::span<const double> cbar, FrameDirections dirs,
                      std::size_t n, std::size_t t_len, double gamma, double eps) {
  std::vector<double> scratch(n);
  for (std::size_t t = 0; t < t_len; ++t) {
    detail::frame_slab_dual(d1.data() + t * n, cbar.data() + t * n, scratch.data(), n, dirs, t,
                            t_len, gamma, eps);
  }
}

void l1_dual_update(std::span<double> d2, std::span<const double> phi_cbar, double gamma,
                    double alpha) {
  for (std::size_t i = 0; i < d2.size(); ++i) {
    d2[i] = std::clamp(d2[i] + gamma * phi_cbar[i], -alpha, alpha);
  }
}

double assign_nearest(std::span<const double> points, std::span<const double> centers,
                      std::size_t n, std::size_t m, std::size_t k, std::span<int> assignment,
                      std::span<double> sq_dist) {
  for (std::size_t i = 0; i < n; ++i) {
    detail::point_nearest(points.data() + i * m, centers.data(), m, k, assignment[i], sq_dist[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += sq_dist[i];
  return total;
}

}  // namespace tvsc::kernels::serial
