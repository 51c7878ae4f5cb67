#include "tvsc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tvsc/rng.hpp"

namespace tvsc {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Removes the components along orthonormal directions (two passes).
void orthogonalize_frame(std::span<double> x, const OrthogonalityBasis& basis, std::size_t t) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t l = 0; l < basis.count(); ++l) {
      const auto v = basis.direction(l, t);
      const double s = dot(x, v);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= s * v[i];
    }
  }
}

void restore_feasibility(StackedVector& c, const OrthogonalityBasis& basis) {
  const double target = static_cast<double>(c.n());
  for (std::size_t t = 0; t < c.t_len(); ++t) {
    auto x = c.frame(t);
    orthogonalize_frame(x, basis, t);
    const double sq = dot(x, x);
    if (!(sq > 0.0)) {
      throw std::runtime_error("pds_solve: frame " + std::to_string(t) +
                               " vanished when projected onto the constraint set");
    }
    const double scale = std::sqrt(target / sq);
    for (double& v : x) v *= scale;
  }
}

double max_slab_violation(const StackedVector& c, const OrthogonalityBasis& basis) {
  double worst = 0.0;
  for (std::size_t t = 0; t < c.t_len(); ++t) {
    for (std::size_t l = 0; l < basis.count(); ++l) {
      worst = std::max(worst, std::abs(dot(c.frame(t), basis.direction(l, t))));
    }
  }
  return worst;
}

StackedVector random_start(const OrthogonalityBasis& basis, Rng& rng) {
  StackedVector c(basis.n(), basis.t_len());
  for (double& v : c.values()) v = rng.normal();
  restore_feasibility(c, basis);
  return c;
}

struct Steps {
  double beta;
  double gamma1;
  double gamma2;
};

Steps choose_steps(std::span<const Laplacian> blocks, const SolverConfig& cfg) {
  const MaxEigenvalue lam = max_eigenvalue(blocks);
  double beta = lam.value;
  if (!lam.converged) {
    // Gershgorin: lambda_max(L) <= 2 * max degree.
    for (const auto& L : blocks) beta = std::max(beta, 2.0 * L.max_degree());
  }
  if (beta <= 0.0) beta = 1.0;  // edgeless frames: any step works, keep the scale sane
  // Default pair sits on the admissibility boundary with a short primal step;
  // gamma1 = 1/beta leaves the slab constraint unstable against the sphere.
  Steps s{beta, cfg.gamma1.value_or(0.25 / beta), cfg.gamma2.value_or(0.7 * beta)};
  const double lhs = 1.0 / s.gamma1 - 5.0 * s.gamma2;
  if (lhs < 0.5 * beta * (1.0 - 1e-12)) {
    throw std::invalid_argument(
        "pds_solve: step sizes violate 1/gamma1 - 5*gamma2 >= beta/2 (gamma1 = " +
        std::to_string(s.gamma1) + ", gamma2 = " + std::to_string(s.gamma2) +
        ", beta = " + std::to_string(beta) + "); try gamma1 = 0.25/beta and gamma2 = 0.7*beta");
  }
  return s;
}

SolveResult run_once(std::span<const Laplacian> blocks, const OrthogonalityBasis& basis,
                     std::span<const double> packed_dirs, const SolverConfig& cfg,
                     const Steps& steps, double eps, StackedVector c, Rng& noise) {
  const kernels::KernelSet& k = kernels::kernel_set(cfg.backend);
  const std::size_t n = basis.n();
  const std::size_t T = basis.t_len();
  const std::size_t size = n * T;
  const double target = static_cast<double>(n);
  const kernels::FrameDirections dirs{packed_dirs, basis.count()};

  SolveResult r;
  r.beta = steps.beta;
  r.gamma1 = steps.gamma1;
  r.gamma2 = steps.gamma2;
  r.epsilon = eps;
  r.d1 = StackedVector(n, T);
  r.d2 = StackedVector(n, T);

  std::vector<double> Lc(size), adj(size), next(size), cbar(size), phi(size);
  std::vector<double> prev_d1(size), prev_d2(size);
  auto cv = c.values();
  auto d1 = r.d1.values();
  auto d2 = r.d2.values();

  auto sphere = [&](std::span<double> z) {
    if (k.project_sphere(z, n, T, target) == 0) return;
    for (std::size_t t = 0; t < T; ++t) {
      auto f = z.subspan(t * n, n);
      if (dot(f, f) > 0.0) continue;
      // Zero frame: nudge with tiny seeded noise and rescale.
      double sq = 0.0;
      for (double& v : f) {
        v = noise.normal();
        sq += v * v;
      }
      const double scale = 1e-8 / std::sqrt(sq);
      for (double& v : f) v *= scale;
    }
    k.project_sphere(z, n, T, target);
  };

  sphere(cv);
  const double c_norm = std::sqrt(target * static_cast<double>(T));

  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    k.block_apply(blocks, cv, Lc);
    r.objective_trace.push_back(k.half_inner_sum(cv, Lc, n, T) + cfg.alpha * k.temporal_l1(cv, n, T));

    k.temporal_diff_adjoint(d2, adj, n, T);
    for (std::size_t i = 0; i < size; ++i) next[i] = cv[i] - steps.gamma1 * (Lc[i] + d1[i] + adj[i]);
    sphere(next);

    double change = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      cbar[i] = 2.0 * next[i] - cv[i];
      const double diff = next[i] - cv[i];
      change += diff * diff;
    }
    if (!std::isfinite(change)) {
      throw std::runtime_error("pds_solve: non-finite iterate at iteration " + std::to_string(it));
    }

    std::copy(d1.begin(), d1.end(), prev_d1.begin());
    std::copy(d2.begin(), d2.end(), prev_d2.begin());
    k.slab_dual_update(d1, cbar, dirs, n, T, steps.gamma2, eps);
    k.temporal_diff(cbar, phi, n, T);
    k.l1_dual_update(d2, phi, steps.gamma2, cfg.alpha);
    double dual_change = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      dual_change += (d1[i] - prev_d1[i]) * (d1[i] - prev_d1[i]) + (d2[i] - prev_d2[i]) * (d2[i] - prev_d2[i]);
    }

    std::copy(next.begin(), next.end(), cv.begin());
    // Primal test from the iteration's loop guard, plus a dual test: with
    // zero duals an eigenvector start is a primal fixed point, so the primal
    // test alone would stop before the temporal term has acted.
    if (std::sqrt(change) / c_norm <= cfg.sigma &&
        std::sqrt(dual_change) <= cfg.sigma * steps.gamma2 * c_norm) {
      r.converged = true;
      ++it;
      break;
    }
  }
  r.iters = it;
  r.raw_slab_violation = max_slab_violation(c, basis);
  restore_feasibility(c, basis);
  r.final_objective = tv_objective(blocks, c, cfg.alpha);
  r.objective_trace.push_back(r.final_objective);
  r.c = std::move(c);
  return r;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be >= 0");
  if (gamma1 && !(*gamma1 > 0.0)) throw std::invalid_argument("gamma1 must be > 0");
  if (gamma2 && !(*gamma2 > 0.0)) throw std::invalid_argument("gamma2 must be > 0");
  if (epsilon && !(*epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
}

OrthogonalityBasis OrthogonalityBasis::ones(std::size_t n, std::size_t t_len) {
  OrthogonalityBasis b(n, t_len);
  b.add_direction(StackedVector(n, t_len, 1.0));
  return b;
}

void OrthogonalityBasis::add_direction(const StackedVector& c) {
  if (c.n() != n_ || c.t_len() != t_len_) {
    throw std::invalid_argument("OrthogonalityBasis: direction shape mismatch");
  }
  StackedVector v = c;
  for (std::size_t t = 0; t < t_len_; ++t) {
    auto x = v.frame(t);
    const double before = std::sqrt(dot(x, x));
    orthogonalize_frame(x, *this, t);
    const double after = std::sqrt(dot(x, x));
    if (!(after > 1e-10 * std::max(before, 1.0))) {
      throw std::invalid_argument("OrthogonalityBasis: frame " + std::to_string(t) +
                                  " is linearly dependent on existing directions");
    }
    for (double& e : x) e /= after;
  }
  directions_.push_back(std::move(v));
}

std::vector<double> OrthogonalityBasis::packed() const {
  std::vector<double> out;
  out.reserve(directions_.size() * n_ * t_len_);
  for (const auto& d : directions_) out.insert(out.end(), d.values().begin(), d.values().end());
  return out;
}

std::vector<double> prox_sphere(std::span<const double> z) {
  const double sq = dot(z, z);
  if (!(sq > 0.0)) throw std::invalid_argument("prox_sphere: zero input has no projection");
  const double scale = std::sqrt(static_cast<double>(z.size()) / sq);
  std::vector<double> out(z.begin(), z.end());
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> prox_slab(std::span<const double> z, std::span<const double> v, double eps) {
  if (z.size() != v.size()) throw std::invalid_argument("prox_slab: dimension mismatch");
  const double vv = dot(v, v);
  if (!(vv > 0.0)) throw std::invalid_argument("prox_slab: zero constraint direction");
  const double s = dot(z, v);
  std::vector<double> out(z.begin(), z.end());
  if (std::abs(s) <= eps) return out;
  const double shift = (s - std::copysign(eps, s)) / vv;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= shift * v[i];
  return out;
}

std::vector<double> soft_threshold(std::span<const double> z, double tau) {
  if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be >= 0");
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double m = std::abs(z[i]) - tau;
    out[i] = m > 0.0 ? std::copysign(m, z[i]) : 0.0;
  }
  return out;
}

std::vector<double> prox_conjugate(const ProxFn& prox_of_f, double gamma, std::span<const double> z) {
  if (!(gamma > 0.0)) throw std::invalid_argument("prox_conjugate: gamma must be > 0");
  std::vector<double> scaled(z.begin(), z.end());
  for (double& v : scaled) v /= gamma;
  const std::vector<double> p = prox_of_f(scaled, 1.0 / gamma);
  std::vector<double> out(z.begin(), z.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= gamma * p[i];
  return out;
}

double tv_objective(std::span<const Laplacian> blocks, const StackedVector& c, double alpha) {
  const std::size_t n = c.n(), T = c.t_len();
  std::vector<double> Lc(c.size());
  kernels::serial::block_apply(blocks, c.values(), Lc);
  return kernels::serial::half_inner_sum(c.values(), Lc, n, T) +
         alpha * kernels::serial::temporal_l1(c.values(), n, T);
}

SolveResult pds_solve(std::span<const Laplacian> blocks, const OrthogonalityBasis& basis,
                      const SolverConfig& cfg, const StackedVector& init) {
  cfg.validate();
  const std::size_t T = blocks.size();
  if (T == 0) throw std::invalid_argument("pds_solve: no frames");
  const std::size_t n = blocks.front().n();
  for (const auto& L : blocks) {
    if (L.n() != n) throw std::invalid_argument("pds_solve: frames have different sizes");
  }
  if (basis.n() != n || basis.t_len() != T) {
    throw std::invalid_argument("pds_solve: basis shape does not match the graph sequence");
  }
  if (init.n() != n || init.t_len() != T) {
    throw std::invalid_argument("pds_solve: init has " + std::to_string(init.size()) +
                                " entries, expected " + std::to_string(n * T));
  }
  const Steps steps = choose_steps(blocks, cfg);
  const double eps = cfg.epsilon.value_or(1e-6 * std::sqrt(static_cast<double>(n)));
  const std::vector<double> packed = basis.packed();

  SolveResult best;
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = substream(cfg.seed, static_cast<std::uint64_t>(r));
    StackedVector start = r == 0 ? init : random_start(basis, rng);
    SolveResult res = run_once(blocks, basis, packed, cfg, steps, eps, std::move(start), rng);
    res.restart = r;
    if (!have || res.final_objective < best.final_objective) {
      best = std::move(res);
      have = true;
    }
  }
  return best;
}

}  // namespace tvsc
