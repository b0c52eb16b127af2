// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <utility>

#include "tpal/common.hpp"

namespace tpal
{

/// T-palindromic Laurent polynomial
///
///   P(lambda) = A_0 + sum_{j=1}^{k} (A_j lambda^j + A_j^T lambda^{-j}),
///
/// stored by its nonnegative-index coefficients only. The negative side is
/// always obtained by transposition, so palindromicity holds structurally.
///
/// `synthetic_count` counts eigenvalues at lambda = -1 that were introduced
/// artificially (see odd_to_even) and that the solver must not compute.
class PalindromicPolynomial
{
public:
  PalindromicPolynomial(MatrixList coeffs, int synthetic_count = 0)
    : coeffs_(std::move(coeffs)), synthetic_count_(synthetic_count)
  {
    if (coeffs_.size() < 2)
    {
      throw ShapeMismatch("PalindromicPolynomial: need A_0..A_k with k >= 1");
    }
    const auto n = coeffs_.front().rows();
    if (n < 1)
    {
      throw ShapeMismatch("PalindromicPolynomial: empty coefficient");
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
    {
      if (coeffs_[j].rows() != n || coeffs_[j].cols() != n)
      {
        throw ShapeMismatch("PalindromicPolynomial: coefficient " + std::to_string(j) +
                            " is not " + std::to_string(n) + "x" + std::to_string(n));
      }
      if (!all_finite(coeffs_[j]))
      {
        throw ShapeMismatch("PalindromicPolynomial: coefficient " + std::to_string(j) +
                            " has non-finite entries");
      }
    }
    // A_0 = A_{-0}^T: the middle coefficient must be symmetric. Rounding-level
    // asymmetry (text input) is removed so the structure holds exactly.
    Matrix &mid = coeffs_.front();
    const double asym = (mid - mid.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * norm_inf(mid))
    {
      throw NotPalindromic("PalindromicPolynomial: A_0 is not symmetric (deviation " +
                               std::to_string(asym) + ")",
                           asym, 0);
    }
    if (asym > 0.0)
    {
      mid = (mid + mid.transpose()) / 2.0;
    }
    if (synthetic_count_ < 0)
    {
      throw ShapeMismatch("PalindromicPolynomial: negative synthetic count");
    }
  }

  int n() const { return static_cast<int>(coeffs_.front().rows()); }
  int k() const { return static_cast<int>(coeffs_.size()) - 1; }
  int synthetic_count() const { return synthetic_count_; }

  const Matrix &coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  const MatrixList &coeffs() const { return coeffs_; }

  // Full list A_{-k}..A_k.
  MatrixList full_coefficients() const
  {
    MatrixList full;
    full.reserve(coeffs_.size() * 2 - 1);
    for (int j = k(); j >= 1; --j)
    {
      full.push_back(coeffs_[j].transpose());
    }
    for (const auto &a : coeffs_)
    {
      full.push_back(a);
    }
    return full;
  }

private:
  MatrixList coeffs_;
  int synthetic_count_ = 0;
};

namespace detail
{

inline void check_square_list(const MatrixList &list, const char *who)
{
  if (list.empty())
  {
    throw ShapeMismatch(std::string(who) + ": empty coefficient list");
  }
  const auto n = list.front().rows();
  for (std::size_t j = 0; j < list.size(); ++j)
  {
    if (list[j].rows() != n || list[j].cols() != n)
    {
      throw ShapeMismatch(std::string(who) + ": coefficient " + std::to_string(j) +
                          " has shape " + std::to_string(list[j].rows()) + "x" +
                          std::to_string(list[j].cols()) + ", expected " + std::to_string(n) +
                          "x" + std::to_string(n));
    }
  }
}

inline double max_abs_diff(const Matrix &a, const Matrix &b)
{
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace detail

/// Builds the half-stored form from A_{-k}..A_k (2k+1 matrices).
///
/// The check A_{-j} == A_j^T is exact by default. A negative `tol` selects
/// 1e-12 * max_j ||A_j||_inf, meant for data that went through decimal text.
inline PalindromicPolynomial from_full_coefficients(const MatrixList &full, double tol = 0.0)
{
  detail::check_square_list(full, "from_full_coefficients");
  if (full.size() % 2 == 0 || full.size() < 3)
  {
    throw ShapeMismatch("from_full_coefficients: expected 2k+1 >= 3 matrices, got " +
                        std::to_string(full.size()));
  }
  const int k = static_cast<int>(full.size() / 2);
  if (tol < 0.0)
  {
    double scale = 0.0;
    for (const auto &a : full)
    {
      scale = std::max(scale, norm_inf(a));
    }
    tol = 1e-12 * scale;
  }

  double worst = 0.0;
  int worst_index = 0;
  for (int j = 0; j <= k; ++j)
  {
    const double dev = detail::max_abs_diff(full[k - j], full[k + j].transpose());
    if (dev > worst)
    {
      worst = dev;
      worst_index = j;
    }
  }
  if (worst > tol)
  {
    std::ostringstream msg;
    msg << "from_full_coefficients: A_{-" << worst_index << "} differs from A_" << worst_index
        << "^T by " << worst << " (tolerance " << tol << ")";
    throw NotPalindromic(msg.str(), worst, worst_index);
  }

  MatrixList half(full.begin() + k, full.end());
  return PalindromicPolynomial(std::move(half));
}

/// P(lambda) by a two-sided Horner scheme.
inline Matrix eval_laurent(const PalindromicPolynomial &p, Complex lambda)
{
  if (lambda == Complex(0.0))
  {
    throw ZeroArgument("eval_laurent: lambda = 0");
  }
  const int k = p.k();
  const Complex inv = 1.0 / lambda;
  Matrix pos = p.coeff(k);
  Matrix neg = p.coeff(k).transpose();
  for (int j = k - 1; j >= 1; --j)
  {
    pos = pos * lambda + p.coeff(j);
    neg = neg * inv + p.coeff(j).transpose();
  }
  return p.coeff(0) + pos * lambda + neg * inv;
}

/// Laurent form of (lambda + 1) P(lambda) / lambda^{(d+1)/2} for a
/// T-palindromic polynomial of odd degree d given by standard coefficients
/// P_0..P_d (P_j = P_{d-j}^T). The n eigenvalues at -1 introduced by the
/// extra factor are recorded in synthetic_count. `tol` as in
/// from_full_coefficients.
inline PalindromicPolynomial odd_to_even(const MatrixList &standard, double tol = 0.0)
{
  detail::check_square_list(standard, "odd_to_even");
  const int d = static_cast<int>(standard.size()) - 1;
  if (d % 2 == 0)
  {
    throw DegreeParity("odd_to_even: degree " + std::to_string(d) + " is even");
  }
  const auto n = standard.front().rows();
  if (tol < 0.0)
  {
    double scale = 0.0;
    for (const auto &a : standard)
    {
      scale = std::max(scale, norm_inf(a));
    }
    tol = 1e-12 * scale;
  }
  double worst = 0.0;
  int worst_index = 0;
  for (int j = 0; j <= d; ++j)
  {
    const double dev = detail::max_abs_diff(standard[j], standard[d - j].transpose());
    if (dev > worst)
    {
      worst = dev;
      worst_index = j;
    }
  }
  if (worst > tol)
  {
    std::ostringstream msg;
    msg << "odd_to_even: P_" << worst_index << " differs from P_" << d - worst_index
        << "^T by " << worst;
    throw NotPalindromic(msg.str(), worst, worst_index);
  }

  // (lambda + 1) P(lambda) has coefficients R_j = P_{j-1} + P_j, degree d + 1 = 2k.
  const int k = (d + 1) / 2;
  MatrixList half;
  half.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i)
  {
    const int j = i + k;
    Matrix r = Matrix::Zero(n, n);
    if (j <= d)
    {
      r += standard[j];
    }
    if (j >= 1)
    {
      r += standard[j - 1];
    }
    half.push_back(std::move(r));
  }
  return PalindromicPolynomial(std::move(half), static_cast<int>(n));
}

/// The H_{n,k} test family: A_0 = 0, A_j = I_n + e_n e_1^T. For n = 1 the
/// coefficients are taken as 1, giving the scalar h(lambda) = sum_j
/// (lambda^j + lambda^{-j}) rather than its double.
inline PalindromicPolynomial gen_h(int n, int k)
{
  if (n < 1 || k < 1)
  {
    throw ShapeMismatch("gen_h: n and k must be positive");
  }
  MatrixList coeffs;
  coeffs.push_back(Matrix::Zero(n, n));
  Matrix a = Matrix::Identity(n, n);
  if (n > 1)
  {
    a(n - 1, 0) += 1.0;
  }
  for (int j = 1; j <= k; ++j)
  {
    coeffs.push_back(a);
  }
  return PalindromicPolynomial(std::move(coeffs));
}

/// Maps a 64-bit draw of std::mt19937_64 to [-1, 1). Uses the top 53 bits so
/// the result is identical on every platform, unlike
/// std::uniform_real_distribution.
inline double unit_symmetric(std::mt19937_64 &rng)
{
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

/// Random coefficients with real and imaginary parts uniform in [-1, 1),
/// drawn from std::mt19937_64(seed) in the order A_0..A_k, row-major, real
/// part before imaginary part. A_0 is symmetric: only its upper triangle is
/// drawn and then mirrored.
inline PalindromicPolynomial gen_random(int n, int k, std::uint64_t seed)
{
  if (n < 1 || k < 1)
  {
    throw ShapeMismatch("gen_random: n and k must be positive");
  }
  std::mt19937_64 rng(seed);
  MatrixList coeffs;
  for (int j = 0; j <= k; ++j)
  {
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
    {
      for (int c = (j == 0 ? r : 0); c < n; ++c)
      {
        const double re = unit_symmetric(rng);
        const double im = unit_symmetric(rng);
        a(r, c) = Complex(re, im);
        if (j == 0)
        {
          a(c, r) = a(r, c);
        }
      }
    }
    coeffs.push_back(std::move(a));
  }
  return PalindromicPolynomial(std::move(coeffs));
}

}  // namespace tpal
