// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "tpal/dickson.hpp"
#include "tpal/newton_trace.hpp"
#include "tpal/polynomial.hpp"

namespace tpal
{

/// Starting-point layout: `a` ellipse classes, axis tuning `b`, random phase
/// drawn from `seed`. `phase` overrides the random phase when set.
struct StartConfig
{
  int a = 2;
  int b = 8;
  std::uint64_t seed = 0;
  std::optional<double> phase;
};

/// Standard normal deviate from std::mt19937_64(seed) by Box-Muller on the
/// first two 53-bit uniforms. Platform independent.
inline double normal_from_seed(std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// N points on the Dickson images of the circles |lambda| = rho, where
/// rho = 1 - (j mod a) / b. The image of rho e^{it} is
/// (rho + 1/rho) cos t + i (1/rho - rho) sin t.
inline std::vector<Complex> starting_points(int count, const StartConfig &cfg)
{
  if (cfg.a < 1 || cfg.b < 1 || cfg.a > cfg.b)
  {
    throw InvalidConfig("starting_points: need 1 <= a <= b, got a = " + std::to_string(cfg.a) +
                        ", b = " + std::to_string(cfg.b));
  }
  std::vector<Complex> z;
  if (count <= 0)
  {
    return z;
  }
  z.reserve(static_cast<std::size_t>(count));
  const double theta = 2.0 * std::numbers::pi / count;
  const double phase = cfg.phase ? *cfg.phase : normal_from_seed(cfg.seed);
  for (int j = 1; j <= count; ++j)
  {
    const int jj = j % cfg.a;
    const double rho = 1.0 - static_cast<double>(jj) / cfg.b;
    const double major = rho + 1.0 / rho;
    const double minor = 1.0 / rho - rho;
    const double t = j * theta + phase;
    z.emplace_back(major * std::cos(t), minor * std::sin(t));
  }
  return z;
}

/// Ellipse parameters from the problem shape, c = round(log_320 N) >= 0:
/// k >= n (high degree): a = 1 + 2^c, b = 8^{c+1};
/// k <  n:               a = 1 + 5 * 2^c, b = 6 * 2^c.
inline StartConfig choose_params(int count, int n, int k, std::uint64_t seed = 0)
{
  int c = 0;
  if (count > 1)
  {
    c = std::max(0, static_cast<int>(std::lround(std::log(count) / std::log(320.0))));
  }
  StartConfig cfg;
  cfg.seed = seed;
  if (k >= n)
  {
    cfg.a = 1 + (1 << c);
    cfg.b = 1 << (3 * (c + 1));
  }
  else
  {
    cfg.a = 1 + 5 * (1 << c);
    cfg.b = 6 * (1 << c);
  }
  return cfg;
}

enum class RootStatus
{
  converged,
  maxit,
  synthetic,
};

inline const char *to_string(RootStatus s)
{
  switch (s)
  {
    case RootStatus::converged:
      return "converged";
    case RootStatus::maxit:
      return "maxit";
    case RootStatus::synthetic:
      return "synthetic";
  }
  return "unknown";
}

struct RootRecord
{
  Complex value;
  double eta_hat = 0.0;  // at the final position
  int sweeps_used = 0;
  RootStatus status = RootStatus::maxit;
};

struct SolveDiagnostics
{
  int sweeps = 0;
  long trace_calls = 0;  // kernel calls made by the iteration itself
  int diverged = 0;      // roots ending with |y| > 1e8
};

struct SpectrumResult
{
  std::vector<RootRecord> y_roots;
  // lambdas[2j], lambdas[2j+1] are the reciprocal pair belonging to y_roots[j].
  std::vector<Complex> lambdas;
  SolveDiagnostics diagnostics;
  // history[s][j]: position of root j after sweep s (s = 0 is the start).
  std::vector<std::vector<Complex>> history;
};

/// 2nk sweeps, but never fewer than 50: clusters of multiple roots converge
/// only linearly and small problems would otherwise stop short.
inline int default_maxit(int n, int k)
{
  return std::max(2 * n * k, 50);
}

struct SolveOptions
{
  double tol = 1e-13;
  std::optional<int> maxit;  // default default_maxit(n, k)
  std::optional<StartConfig> start;
  std::uint64_t seed = 0;  // used when `start` is not given
  bool record_history = false;
  // Jacobi ordering: every correction of a sweep is computed from the
  // positions at the start of the sweep. Allows `threads` > 1.
  bool jacobi = false;
  int threads = 1;
};

namespace detail
{

// Aberth step h = N / (1 + N * sum_{l != j} 1 / (z_l - z_j)), N = 2 / eta.
inline Complex aberth_step(const std::vector<Complex> &z, std::size_t j, Complex eta)
{
  Complex repel = 0.0;
  for (std::size_t l = 0; l < z.size(); ++l)
  {
    if (l != j)
    {
      repel += 1.0 / (z[l] - z[j]);
    }
  }
  if (eta == Complex(0.0))
  {
    // Limit of the step as the Newton correction goes to infinity.
    return repel == Complex(0.0) ? Complex(0.0) : 1.0 / repel;
  }
  const Complex newton = 2.0 / eta;
  return newton / (1.0 + newton * repel);
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn &&fn)
{
  if (threads <= 1 || count < 2)
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      fn(i);
    }
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
  {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers)
      {
        fn(i);
      }
    });
  }
}

}  // namespace detail

/// Ehrlich-Aberth iteration on the N = nk roots of p(y), p^2 = det M(y).
///
/// Roots that satisfy eta_hat <= tol (at the point where the kernel was
/// evaluated) or |h| <= tol |z_j| are frozen but keep repelling the others.
/// Eigenvalues at -1 introduced by odd_to_even are not computed: the
/// corresponding roots are pinned at y = -2 from the start.
inline SpectrumResult solve(const PalindromicPolynomial &p, const SolveOptions &opts = {})
{
  const int n = p.n();
  const int k = p.k();
  const int total = n * k;
  const int maxit = opts.maxit ? *opts.maxit : default_maxit(n, k);
  const StartConfig cfg = opts.start ? *opts.start : choose_params(total, n, k, opts.seed);

  const DicksonSystem system = dickson_transform(p);

  // Each pinned y = -2 carries the pair (-1, -1).
  const int pinned = std::min(total, (p.synthetic_count() + 1) / 2);
  const int free_count = total - pinned;

  SpectrumResult res;
  res.y_roots.resize(static_cast<std::size_t>(total));
  std::vector<Complex> z(static_cast<std::size_t>(total));
  std::vector<char> active(static_cast<std::size_t>(total), 1);
  for (int j = 0; j < pinned; ++j)
  {
    z[j] = -2.0;
    active[j] = 0;
    res.y_roots[j].status = RootStatus::synthetic;
  }
  const auto start = starting_points(free_count, cfg);
  std::copy(start.begin(), start.end(), z.begin() + pinned);

  if (opts.record_history)
  {
    res.history.push_back(z);
  }

  int remaining = free_count;
  auto finish = [&](std::size_t j, RootStatus status) {
    active[j] = 0;
    res.y_roots[j].status = status;
    --remaining;
  };

  std::vector<NewtonStep> steps(static_cast<std::size_t>(total));
  int sweep = 0;
  while (remaining > 0 && sweep < maxit)
  {
    ++sweep;
    if (opts.jacobi)
    {
      const std::vector<Complex> frozen = z;
      std::vector<std::size_t> work;
      for (std::size_t j = 0; j < z.size(); ++j)
      {
        if (active[j])
        {
          work.push_back(j);
        }
      }
      detail::parallel_for(work.size(), opts.threads, [&](std::size_t i) {
        steps[work[i]] = trace_correction(system, frozen[work[i]]);
      });
      for (std::size_t j : work)
      {
        ++res.diagnostics.trace_calls;
        ++res.y_roots[j].sweeps_used;
        if (steps[j].singular)
        {
          finish(j, RootStatus::converged);
          continue;
        }
        const Complex h = detail::aberth_step(frozen, j, steps[j].eta);
        z[j] = frozen[j] - h;
        if (steps[j].eta_hat <= opts.tol || std::abs(h) <= opts.tol * std::abs(z[j]))
        {
          finish(j, RootStatus::converged);
        }
      }
    }
    else
    {
      for (std::size_t j = 0; j < z.size(); ++j)
      {
        if (!active[j])
        {
          continue;
        }
        const NewtonStep step = trace_correction(system, z[j]);
        ++res.diagnostics.trace_calls;
        ++res.y_roots[j].sweeps_used;
        if (step.singular)
        {
          finish(j, RootStatus::converged);
          continue;
        }
        const Complex h = detail::aberth_step(z, j, step.eta);
        z[j] -= h;
        if (step.eta_hat <= opts.tol || std::abs(h) <= opts.tol * std::abs(z[j]))
        {
          finish(j, RootStatus::converged);
        }
      }
    }
    if (opts.record_history)
    {
      res.history.push_back(z);
    }
  }
  res.diagnostics.sweeps = sweep;

  res.lambdas.reserve(2 * z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
  {
    RootRecord &rec = res.y_roots[j];
    rec.value = z[j];
    if (rec.status == RootStatus::synthetic)
    {
      rec.eta_hat = 0.0;
      res.lambdas.push_back(-1.0);
      res.lambdas.push_back(-1.0);
      continue;
    }
    const NewtonStep final_step = trace_correction(system, z[j]);
    rec.eta_hat = final_step.singular ? 0.0 : final_step.eta_hat;
    if (std::abs(z[j]) > 1e8)
    {
      ++res.diagnostics.diverged;
    }
    const auto [big, small] = recover_lambda_pair(z[j]);
    res.lambdas.push_back(big);
    res.lambdas.push_back(small);
  }
  return res;
}

}  // namespace tpal
