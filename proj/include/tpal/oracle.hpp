// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference path. Everything here works in the monomial basis
// with Eigen's own LU and deliberately avoids the Dickson machinery, so that
// a bug in one path cannot hide in the other.

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "tpal/dickson.hpp"
#include "tpal/polynomial.hpp"

namespace tpal::oracle
{

/// Scalar polynomial, ascending monomial coefficients.
struct ScalarPoly
{
  std::vector<Complex> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Complex operator()(Complex z) const
  {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
    {
      acc = acc * z + *it;
    }
    return acc;
  }

  // Drops leading coefficients below rel * max|c_i|.
  void trim(double rel = 1e-12)
  {
    double big = 0.0;
    for (const auto &v : c)
    {
      big = std::max(big, std::abs(v));
    }
    while (c.size() > 1 && std::abs(c.back()) <= rel * big)
    {
      c.pop_back();
    }
  }
};

inline Complex det_dense(const Matrix &a)
{
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

/// sum_i coeffs[i] z^i with plain Horner.
inline Matrix eval_standard(const MatrixList &coeffs, Complex z)
{
  Matrix acc = coeffs.back();
  for (int i = static_cast<int>(coeffs.size()) - 2; i >= 0; --i)
  {
    acc = acc * z + coeffs[i];
  }
  return acc;
}

/// det(sum_i coeffs[i] z^i) as a polynomial of degree <= n * (len - 1), by
/// sampling on a circle and an inverse DFT (direct O(d^2) sum).
inline ScalarPoly det_poly_standard(const MatrixList &coeffs)
{
  const int n = static_cast<int>(coeffs.front().rows());
  const int deg = n * (static_cast<int>(coeffs.size()) - 1);
  const int nodes = deg + 1;

  for (const double radius : {1.0, 1.1})
  {
    std::vector<Complex> values(static_cast<std::size_t>(nodes));
    bool hit = false;
    for (int m = 0; m < nodes; ++m)
    {
      const Complex w = std::polar(radius, 2.0 * std::numbers::pi * m / nodes);
      values[m] = det_dense(eval_standard(coeffs, w));
      if (values[m] == Complex(0.0))
      {
        hit = true;
        break;
      }
    }
    if (hit)
    {
      continue;
    }
    ScalarPoly out;
    out.c.resize(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
    {
      Complex s = 0.0;
      for (int m = 0; m < nodes; ++m)
      {
        const long idx = (static_cast<long>(i) * m) % nodes;
        s += values[m] * std::polar(1.0, -2.0 * std::numbers::pi * idx / nodes);
      }
      out.c[i] = s / (static_cast<double>(nodes) * std::pow(radius, i));
    }
    return out;
  }
  throw EvaluationSingular("det_poly: interpolation node is an eigenvalue");
}

/// Standard coefficients of lambda^k P(lambda): A_{-k}, ..., A_k.
inline MatrixList shifted_coefficients(const PalindromicPolynomial &p)
{
  MatrixList out;
  for (int j = p.k(); j >= 1; --j)
  {
    out.push_back(p.coeff(j).transpose());
  }
  for (int j = 0; j <= p.k(); ++j)
  {
    out.push_back(p.coeff(j));
  }
  return out;
}

/// det(lambda^k P(lambda)), degree <= 2nk. Not trimmed.
inline ScalarPoly det_poly(const PalindromicPolynomial &p)
{
  return det_poly_standard(shifted_coefficients(p));
}

struct ScalarRoots
{
  std::vector<Complex> roots;
  std::vector<char> converged;
  int iterations = 0;
};

/// All roots of q by the scalar Ehrlich-Aberth iteration (Horner for q, q'),
/// starting on a circle of radius 1 + max|c_i / c_d|.
inline ScalarRoots scalar_aberth(const ScalarPoly &q, double tol = 1e-14, int maxit = 500)
{
  ScalarPoly poly = q;
  poly.trim(0.0);
  const int d = poly.degree();
  if (d < 1)
  {
    throw ShapeMismatch("scalar_aberth: degree must be at least 1");
  }
  ScalarRoots out;
  if (d == 1)
  {
    out.roots = {-poly.c[0] / poly.c[1]};
    out.converged = {1};
    return out;
  }

  double bound = 0.0;
  for (int i = 0; i < d; ++i)
  {
    bound = std::max(bound, std::abs(poly.c[i] / poly.c[d]));
  }
  const double radius = 1.0 + bound;
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
  {
    z[j] = std::polar(radius, 2.0 * std::numbers::pi * (j + 0.25) / d + 0.4);
  }
  std::vector<char> done(static_cast<std::size_t>(d), 0);

  auto eval_both = [&](Complex x, Complex &v, Complex &dv) {
    v = poly.c[d];
    dv = 0.0;
    for (int i = d - 1; i >= 0; --i)
    {
      dv = dv * x + v;
      v = v * x + poly.c[i];
    }
  };

  int it = 0;
  for (; it < maxit; ++it)
  {
    bool all = true;
    for (int j = 0; j < d; ++j)
    {
      if (done[j])
      {
        continue;
      }
      Complex v, dv;
      eval_both(z[j], v, dv);
      if (v == Complex(0.0))
      {
        done[j] = 1;
        continue;
      }
      const Complex newton = v / dv;
      Complex repel = 0.0;
      for (int l = 0; l < d; ++l)
      {
        if (l != j)
        {
          repel += 1.0 / (z[j] - z[l]);
        }
      }
      const Complex h = newton / (1.0 - newton * repel);
      z[j] -= h;
      if (std::abs(h) <= tol * std::abs(z[j]))
      {
        done[j] = 1;
      }
      else
      {
        all = false;
      }
    }
    if (all)
    {
      break;
    }
  }
  out.iterations = it;
  out.roots = std::move(z);
  out.converged = std::move(done);
  return out;
}

struct ReferenceSpectrum
{
  std::vector<Complex> lambdas;  // pairs: lambdas[2j] * lambdas[2j+1] ~ 1
  std::vector<Complex> y;        // y[j] = lambdas[2j] + lambdas[2j+1]
  double pairing_residual = 0.0;
  bool complete = true;          // false if the degree was deficient
};

/// Pairs roots by smallest |a b - 1| first. Throws PairingFailure if the
/// worst accepted pair is off by more than 1e-4 or a root is left alone.
inline ReferenceSpectrum pair_reciprocals(const std::vector<Complex> &roots)
{
  struct Candidate
  {
    double residual;
    std::size_t a, b;
  };
  std::vector<Candidate> cand;
  for (std::size_t a = 0; a < roots.size(); ++a)
  {
    for (std::size_t b = a + 1; b < roots.size(); ++b)
    {
      cand.push_back({std::abs(roots[a] * roots[b] - 1.0), a, b});
    }
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate &x, const Candidate &y) {
    return x.residual < y.residual;
  });
  std::vector<char> used(roots.size(), 0);
  ReferenceSpectrum out;
  for (const auto &c : cand)
  {
    if (used[c.a] || used[c.b])
    {
      continue;
    }
    used[c.a] = used[c.b] = 1;
    out.pairing_residual = std::max(out.pairing_residual, c.residual);
    out.lambdas.push_back(roots[c.a]);
    out.lambdas.push_back(roots[c.b]);
    out.y.push_back(roots[c.a] + roots[c.b]);
  }
  if (out.lambdas.size() != roots.size())
  {
    throw PairingFailure("reference_spectrum: odd number of roots, one left unpaired",
                         std::numeric_limits<double>::infinity());
  }
  if (out.pairing_residual > 1e-4)
  {
    throw PairingFailure("reference_spectrum: reciprocal pairing residual " +
                             std::to_string(out.pairing_residual),
                         out.pairing_residual);
  }
  return out;
}

inline ReferenceSpectrum spectrum_of(const ScalarPoly &det, int expected_count)
{
  ScalarPoly q = det;
  q.trim();
  std::vector<Complex> kept;
  if (q.degree() >= 1)
  {
    for (const auto &r : scalar_aberth(q).roots)
    {
      const double m = std::abs(r);
      if (m > 1e-8 && m < 1e8)
      {
        kept.push_back(r);
      }
    }
  }
  ReferenceSpectrum out = pair_reciprocals(kept);
  out.complete = static_cast<int>(kept.size()) == expected_count;
  return out;
}

/// Finite nonzero eigenvalues of P from the roots of det(lambda^k P(lambda)),
/// paired as (lambda, 1/lambda).
inline ReferenceSpectrum reference_spectrum(const PalindromicPolynomial &p)
{
  return spectrum_of(det_poly(p), 2 * p.n() * p.k());
}

/// Same for a polynomial given by standard coefficients (any degree).
inline ReferenceSpectrum reference_spectrum_standard(const MatrixList &coeffs)
{
  const int n = static_cast<int>(coeffs.front().rows());
  return spectrum_of(det_poly_standard(coeffs), n * (static_cast<int>(coeffs.size()) - 1));
}

/// Dickson-basis evaluation written out independently of eval_dickson.
inline Matrix eval_m(const DicksonSystem &d, Complex y)
{
  Matrix acc = d.M[0] * 2.0;
  Complex prev = 2.0, cur = y;
  for (int j = 1; j <= d.k + 1; ++j)
  {
    acc += cur * d.M[j];
    const Complex next = y * cur - prev;
    prev = cur;
    cur = next;
  }
  return acc;
}

/// (det M)'(y) / det M(y) by a central difference, h = 1e-6 (1 + |y|).
inline Complex logdet_derivative_check(const DicksonSystem &d, Complex y)
{
  const double h = 1e-6 * (1.0 + std::abs(y));
  const Complex mid = det_dense(eval_m(d, y));
  if (mid == Complex(0.0))
  {
    throw EvaluationSingular("logdet_derivative_check: det M(y) = 0");
  }
  const Complex up = det_dense(eval_m(d, y + h));
  const Complex down = det_dense(eval_m(d, y - h));
  return (up - down) / (2.0 * h * mid);
}

/// |det P(lambda)| / (||A_0|| + sum_{j>=1} ||A_j|| (|lambda|^j + |lambda|^{-j}))^n.
inline double residual(const PalindromicPolynomial &p, Complex lambda)
{
  if (lambda == Complex(0.0))
  {
    throw ZeroArgument("residual: lambda = 0");
  }
  const MatrixList coeffs = shifted_coefficients(p);
  const int k = p.k();
  // P(lambda) = lambda^{-k} sum_i coeffs[i] lambda^i.
  const Matrix value = eval_standard(coeffs, lambda) * std::pow(lambda, -k);
  const double m = std::abs(lambda);
  double scale = norm_inf(p.coeff(0));
  for (int j = 1; j <= k; ++j)
  {
    scale += norm_inf(p.coeff(j)) * (std::pow(m, j) + std::pow(m, -j));
  }
  return std::abs(det_dense(value)) / std::pow(scale, p.n());
}

}  // namespace tpal::oracle
