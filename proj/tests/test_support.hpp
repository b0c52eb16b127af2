// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "tpal/tpal.hpp"

namespace tpal::testing
{

inline Complex random_complex(std::mt19937_64 &rng, double lo = -1.0, double hi = 1.0)
{
  std::uniform_real_distribution<double> u(lo, hi);
  const double re = u(rng);
  return {re, u(rng)};
}

/// Random lambda with lo <= |lambda| <= hi and |lambda -+ 1| >= gap.
inline Complex random_lambda(std::mt19937_64 &rng, double lo, double hi, double gap)
{
  std::uniform_real_distribution<double> radius(lo, hi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  while (true)
  {
    const Complex z = std::polar(radius(rng), angle(rng));
    if (std::abs(z - 1.0) >= gap && std::abs(z + 1.0) >= gap)
    {
      return z;
    }
  }
}

inline Matrix random_matrix(std::mt19937_64 &rng, int rows, int cols)
{
  Matrix a(rows, cols);
  for (int j = 0; j < cols; ++j)
  {
    for (int i = 0; i < rows; ++i)
    {
      a(i, j) = random_complex(rng);
    }
  }
  return a;
}

inline double rel_err(Complex got, Complex want)
{
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(const Matrix &got, const Matrix &want)
{
  return (got - want).cwiseAbs().maxCoeff() / std::max(want.cwiseAbs().maxCoeff(), 1e-300);
}

/// Minimum-cost perfect assignment (Hungarian method, O(n^3)). Returns for
/// each row the assigned column.
inline std::vector<int> assignment(const std::vector<std::vector<double>> &cost)
{
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i)
  {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do
    {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j)
      {
        if (used[j])
        {
          continue;
        }
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j])
        {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta)
        {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j)
      {
        if (used[j])
        {
          u[p[j]] += delta;
          v[j] -= delta;
        }
        else
        {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do
    {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> out(n, -1);
  for (int j = 1; j <= n; ++j)
  {
    if (p[j] > 0)
    {
      out[p[j] - 1] = j - 1;
    }
  }
  return out;
}

/// Largest distance in the optimal (minimum total distance) matching of two
/// equally sized multisets. Infinity if sizes differ.
inline double matching_distance(const std::vector<Complex> &a, const std::vector<Complex> &b)
{
  if (a.size() != b.size())
  {
    return std::numeric_limits<double>::infinity();
  }
  if (a.empty())
  {
    return 0.0;
  }
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    for (std::size_t j = 0; j < b.size(); ++j)
    {
      cost[i][j] = std::abs(a[i] - b[j]);
    }
  }
  const auto match = assignment(cost);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    worst = std::max(worst, cost[i][match[i]]);
  }
  return worst;
}

inline std::vector<Complex> y_values(const SpectrumResult &res, bool include_synthetic = true)
{
  std::vector<Complex> out;
  for (const auto &r : res.y_roots)
  {
    if (include_synthetic || r.status != RootStatus::synthetic)
    {
      out.push_back(r.value);
    }
  }
  return out;
}

inline double min_separation(const std::vector<Complex> &z)
{
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
  {
    for (std::size_t j = i + 1; j < z.size(); ++j)
    {
      best = std::min(best, std::abs(z[i] - z[j]));
    }
  }
  return best;
}

/// A random T-palindromic polynomial of odd degree d in standard form:
/// P_j = P_{d-j}^T.
inline MatrixList random_odd_standard(std::mt19937_64 &rng, int n, int d)
{
  MatrixList coeffs(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d / 2; ++j)
  {
    coeffs[j] = random_matrix(rng, n, n);
    coeffs[d - j] = coeffs[j].transpose();
  }
  return coeffs;
}

/// The counterexample polynomial with parameter a:
/// [[l - 2 + 1/l, a l - a/l], [-a l + a/l, l + 1/l]].
inline PalindromicPolynomial counterexample(double a)
{
  Matrix a0(2, 2), a1(2, 2);
  a0 << -2.0, 0.0, 0.0, 0.0;
  a1 << 1.0, a, -a, 1.0;
  return PalindromicPolynomial({a0, a1});
}

/// The displayed M(y) of the counterexample, entry by entry.
inline Matrix counterexample_m(double a, Complex y)
{
  Matrix m(4, 4);
  m << y - 2.0, 0.0, 0.0, a * y * y - 4.0 * a,  //
      0.0, y, 4.0 * a - a * y * y, 0.0,         //
      0.0, a, y - 2.0, 0.0,                     //
      -a, 0.0, 0.0, y;
  return m;
}

}  // namespace tpal::testing
