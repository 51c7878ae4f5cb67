#include <doctest.h>

#include <omp.h>

#include <cstring>

#include "oracles.hpp"
#include "tvsc/generators.hpp"
#include "tvsc/kernels.hpp"
#include "tvsc/solver.hpp"

using namespace tvsc;
namespace k = tvsc::kernels;

namespace {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Fixture {
  std::size_t n = 24, T = 9;
  std::vector<Laplacian> blocks;
  OrthogonalityBasis basis;
  std::vector<double> x, y;

  Fixture() {
    SbmTvParams p;
    p.n_per_cluster = 8;
    p.t_len = T;
    p.seed = 99;
    blocks = sbm_tv_sequence(p).first.laplacians();
    Rng rng(4);
    x = oracle::random_vector(rng, n * T, 3.0);
    y = oracle::random_vector(rng, n * T, 3.0);
    basis = OrthogonalityBasis::ones(n, T);
    basis.add_direction(StackedVector(n, T, oracle::random_vector(rng, n * T)));
  }
};

}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
  omp_set_num_threads(4);
  Fixture f;
  const auto& s = k::kernel_set(k::Backend::serial);
  const auto& p = k::kernel_set(k::Backend::parallel);
  const std::size_t size = f.n * f.T;

  std::vector<double> a(size), b(size);
  s.block_apply(f.blocks, f.x, a);
  p.block_apply(f.blocks, f.x, b);
  CHECK(bitwise_equal(a, b));

  CHECK(s.half_inner_sum(f.x, a, f.n, f.T) == p.half_inner_sum(f.x, b, f.n, f.T));
  CHECK(s.temporal_l1(f.x, f.n, f.T) == p.temporal_l1(f.x, f.n, f.T));

  s.temporal_diff(f.x, a, f.n, f.T);
  p.temporal_diff(f.x, b, f.n, f.T);
  CHECK(bitwise_equal(a, b));
  s.temporal_diff_adjoint(f.y, a, f.n, f.T);
  p.temporal_diff_adjoint(f.y, b, f.n, f.T);
  CHECK(bitwise_equal(a, b));

  a = f.x;
  b = f.x;
  std::fill(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(f.n), 0.0);
  std::fill(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(f.n), 0.0);
  CHECK(s.project_sphere(a, f.n, f.T, double(f.n)) == 1);
  CHECK(p.project_sphere(b, f.n, f.T, double(f.n)) == 1);
  CHECK(bitwise_equal(a, b));

  const auto packed = f.basis.packed();
  const k::FrameDirections dirs{packed, f.basis.count()};
  a = f.y;
  b = f.y;
  s.slab_dual_update(a, f.x, dirs, f.n, f.T, 0.7, 1e-3);
  p.slab_dual_update(b, f.x, dirs, f.n, f.T, 0.7, 1e-3);
  CHECK(bitwise_equal(a, b));

  a = f.y;
  b = f.y;
  s.l1_dual_update(a, f.x, 0.3, 1.5);
  p.l1_dual_update(b, f.x, 0.3, 1.5);
  CHECK(bitwise_equal(a, b));

  const std::size_t m = 3, kc = 4, pts = size / m;
  std::vector<double> centers(f.y.begin(), f.y.begin() + static_cast<std::ptrdiff_t>(kc * m));
  std::vector<int> as(pts), ap(pts);
  std::vector<double> ds(pts), dp(pts);
  CHECK(s.assign_nearest(f.x, centers, pts, m, kc, as, ds) ==
        p.assign_nearest(f.x, centers, pts, m, kc, ap, dp));
  CHECK(as == ap);
  CHECK(bitwise_equal(ds, dp));
}

TEST_CASE("kernels match direct formulas") {
  Fixture f;
  const auto& s = k::kernel_set(k::Backend::serial);
  const std::size_t size = f.n * f.T;

  std::vector<double> Lx(size);
  s.block_apply(f.blocks, f.x, Lx);
  double expected = 0.0;
  for (std::size_t t = 0; t < f.T; ++t) {
    expected += 0.5 * quadratic_form(f.blocks[t], std::span<const double>(f.x).subspan(t * f.n, f.n));
  }
  CHECK(s.half_inner_sum(f.x, Lx, f.n, f.T) == doctest::Approx(expected).epsilon(1e-12));

  double l1 = 0.0;
  for (std::size_t i = f.n; i < size; ++i) l1 += std::abs(f.x[i] - f.x[i - f.n]);
  CHECK(s.temporal_l1(f.x, f.n, f.T) == doctest::Approx(l1).epsilon(1e-12));

  std::vector<double> d(f.y);
  s.l1_dual_update(d, f.x, 0.5, 1.0);
  for (std::size_t i = 0; i < size; ++i) {
    CHECK(d[i] == std::clamp(f.y[i] + 0.5 * f.x[i], -1.0, 1.0));
  }

  std::vector<double> z(f.x);
  s.project_sphere(z, f.n, f.T, 5.0);
  for (std::size_t t = 0; t < f.T; ++t) {
    const auto fr = std::span<const double>(z).subspan(t * f.n, f.n);
    CHECK(oracle::dot(fr, fr) == doctest::Approx(5.0).epsilon(1e-12));
  }
}

TEST_CASE("slab dual update satisfies the conjugate prox identity") {
  // With y = d1 + gamma * cbar, the update returns y - gamma * P(y / gamma).
  // Check against the single-direction QP oracle.
  const std::size_t n = 5, T = 3;
  Rng rng(8);
  const auto d1 = oracle::random_vector(rng, n * T);
  const auto cbar = oracle::random_vector(rng, n * T);
  const auto basis = OrthogonalityBasis::ones(n, T);
  const auto packed = basis.packed();
  std::vector<double> out(d1);
  const double gamma = 0.8, eps = 0.05;
  k::serial::slab_dual_update(out, cbar, {packed, 1}, n, T, gamma, eps);
  for (std::size_t t = 0; t < T; ++t) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = (d1[t * n + i] + gamma * cbar[t * n + i]) / gamma;
    const auto v = basis.direction(0, t);
    const auto proj = oracle::slab_qp(y, v, eps);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(out[t * n + i] == doctest::Approx(gamma * (y[i] - proj[i])).epsilon(1e-12));
    }
  }
}
