#pragma once

// Per-frame arithmetic shared by the serial and parallel kernels. Keeping a
// single definition of each frame-local loop is what makes the two backends
// agree bitwise.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "tvsc/kernels.hpp"

namespace tvsc::kernels::detail {

inline double frame_half_inner(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return 0.5 * s;
}

inline double frame_l1_diff(const double* cur, const double* prev, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(cur[i] - prev[i]);
  return s;
}

inline void frame_diff(const double* x, double* out, std::size_t n, std::size_t t) {
  if (t == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const double* prev = x - n;
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - prev[i];
}

inline void frame_diff_adjoint(const double* d, double* out, std::size_t n, std::size_t t,
                               std::size_t t_len) {
  const bool has_self = t >= 1;
  const bool has_next = t + 1 < t_len;
  for (std::size_t i = 0; i < n; ++i) {
    double v = has_self ? d[i] : 0.0;
    if (has_next) v -= d[i + n];
    out[i] = v;
  }
}

inline bool frame_project_sphere(double* z, std::size_t n, double target) {
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) sq += z[i] * z[i];
  if (!(sq > 0.0)) return false;
  const double scale = std::sqrt(target / sq);
  for (std::size_t i = 0; i < n; ++i) z[i] *= scale;
  return true;
}

/// In-place sequential projection of x onto |x^T v| <= eps for unit v.
inline void frame_project_slabs(double* x, std::size_t n, FrameDirections dirs, std::size_t t,
                                std::size_t t_len, double eps) {
  for (std::size_t l = 0; l < dirs.count; ++l) {
    const double* v = dirs.data.data() + (l * t_len + t) * n;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * v[i];
    double shift = 0.0;
    if (s > eps) {
      shift = s - eps;
    } else if (s < -eps) {
      shift = s + eps;
    } else {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] -= shift * v[i];
  }
}

inline void frame_slab_dual(double* d1, const double* cbar, double* scratch, std::size_t n,
                            FrameDirections dirs, std::size_t t, std::size_t t_len, double gamma,
                            double eps) {
  for (std::size_t i = 0; i < n; ++i) {
    d1[i] += gamma * cbar[i];
    scratch[i] = d1[i] / gamma;
  }
  frame_project_slabs(scratch, n, dirs, t, t_len, eps);
  for (std::size_t i = 0; i < n; ++i) d1[i] -= gamma * scratch[i];
}

inline void point_nearest(const double* p, const double* centers, std::size_t m, std::size_t k,
                          int& best_c, double& best_d) {
  best_c = 0;
  best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    const double* q = centers + c * m;
    double d = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double diff = p[j] - q[j];
      d += diff * diff;
    }
    if (d < best_d) {
      best_d = d;
      best_c = static_cast<int>(c);
    }
  }
}

}  // namespace tvsc::kernels::detail
