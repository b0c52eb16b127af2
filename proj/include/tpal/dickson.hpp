// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "tpal/common.hpp"
#include "tpal/polynomial.hpp"

namespace tpal
{

// Dickson polynomials: phi_0 = 2, phi_1 = y, y phi_j = phi_{j+1} + phi_{j-1},
// so that phi_j(lambda + 1/lambda) = lambda^j + lambda^{-j}.

/// phi_0(y)..phi_m(y) in one forward pass.
inline std::vector<Complex> phi_all(int m, Complex y)
{
  std::vector<Complex> out(static_cast<std::size_t>(std::max(m, 0)) + 1);
  out[0] = 2.0;
  if (m >= 1)
  {
    out[1] = y;
  }
  for (int j = 1; j < m; ++j)
  {
    out[j + 1] = y * out[j] - out[j - 1];
  }
  return out;
}

inline Complex phi(int j, Complex y)
{
  if (j < 0)
  {
    throw ShapeMismatch("phi: negative index");
  }
  Complex prev = 2.0;
  if (j == 0)
  {
    return prev;
  }
  Complex cur = y;
  for (int i = 1; i < j; ++i)
  {
    const Complex next = y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Complex dickson_point(Complex lambda)
{
  if (lambda == Complex(0.0))
  {
    throw ZeroArgument("dickson_point: lambda = 0");
  }
  return lambda + 1.0 / lambda;
}

/// Both roots of lambda^2 - y lambda + 1 = 0. The first is the one of larger
/// modulus, computed without cancellation; the second is its reciprocal, so
/// the pair multiplies to 1 up to a single rounding.
inline std::pair<Complex, Complex> recover_lambda_pair(Complex y)
{
  // (y - 2)(y + 2) keeps relative accuracy of y^2 - 4 near y = +-2.
  const Complex root = std::sqrt((y - 2.0) * (y + 2.0));
  const Complex plus = y + root;
  const Complex minus = y - root;
  const Complex big = (std::abs(plus) >= std::abs(minus) ? plus : minus) / 2.0;
  return {big, 1.0 / big};
}

/// Coefficients of M(y) = sum_{j=0}^{k+1} M_j phi_j(y) together with the
/// pieces it is assembled from:
///   B(y) = sum B_j phi_j    symmetric part,
///   C(y) = sum C_j phi_j    skew part, with P = B(y) + w C(y), w = lambda - 1/lambda,
///   Ctilde(y) = (y^2 - 4) C(y),
///   M_j = [[B_j, Ctilde_j], [C_j, B_j]].
/// The constant coefficients are stored halved since phi_0 = 2.
struct DicksonSystem
{
  int n = 0;
  int k = 0;
  MatrixList M;       // k + 2 entries, 2n x 2n
  MatrixList B;       // k + 2 entries, B_{k+1} = 0
  MatrixList C;       // k + 2 entries, C_k = C_{k+1} = 0
  MatrixList Ctilde;  // k + 2 entries
};

/// Q(y) coefficients for a purely palindromic P (all A_j symmetric):
/// Q_0 = A_0 / 2, Q_j = A_j.
inline MatrixList pure_palindromic_coeffs(const PalindromicPolynomial &p)
{
  MatrixList q;
  q.reserve(static_cast<std::size_t>(p.k()) + 1);
  for (int j = 0; j <= p.k(); ++j)
  {
    const Matrix &a = p.coeff(j);
    const double dev = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (dev > 1e-12 * norm_inf(a))
    {
      throw NotPurelyPalindromic("pure_palindromic_coeffs: A_" + std::to_string(j) +
                                 " is not symmetric (deviation " + std::to_string(dev) + ")");
    }
    q.push_back(j == 0 ? Matrix(a / 2.0) : a);
  }
  return q;
}

inline DicksonSystem dickson_transform(const PalindromicPolynomial &p)
{
  const int k = p.k();
  const int n = p.n();
  if (k < 1)
  {
    throw DegreeTooSmall("dickson_transform: k must be at least 1");
  }
  const std::size_t count = static_cast<std::size_t>(k) + 2;
  const Matrix zero = Matrix::Zero(n, n);

  DicksonSystem d;
  d.n = n;
  d.k = k;
  d.B.assign(count, zero);
  d.C.assign(count, zero);
  d.Ctilde.assign(count, zero);

  MatrixList skew(static_cast<std::size_t>(k) + 1, zero);
  d.B[0] = p.coeff(0) / 2.0;
  for (int j = 1; j <= k; ++j)
  {
    const Matrix &a = p.coeff(j);
    d.B[j] = (a + a.transpose()) / 2.0;
    skew[j] = (a - a.transpose()) / 2.0;
  }

  // lambda^j - lambda^{-j} = w (phi_{j-1} + phi_{j-3} + ...), the last term
  // being phi_0 / 2 for odd j. Parity-split suffix sums give C_0..C_{k-1}.
  Matrix odd = zero;
  Matrix even = zero;
  for (int j = k; j >= 1; --j)
  {
    Matrix &acc = (j % 2 == 1) ? odd : even;
    acc += skew[j];
    d.C[j - 1] = acc;
  }
  d.C[0] /= 2.0;

  // (y^2 - 4) = phi_2 - phi_0, with phi_2 phi_0 = 2 phi_2, phi_2 phi_1 =
  // phi_3 + phi_1, phi_2 phi_j = phi_{j+2} + phi_{j-2} for j >= 2.
  for (int j = 0; j <= k - 1; ++j)
  {
    const Matrix &c = d.C[j];
    if (j == 0)
    {
      d.Ctilde[2] += 2.0 * c;
    }
    else if (j == 1)
    {
      d.Ctilde[3] += c;
      d.Ctilde[1] += c;
    }
    else
    {
      d.Ctilde[j + 2] += c;
      d.Ctilde[j - 2] += c;
    }
    d.Ctilde[j] -= 2.0 * c;
  }

  d.M.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
  {
    Matrix m(2 * n, 2 * n);
    m << d.B[j], d.Ctilde[j], d.C[j], d.B[j];
    d.M.push_back(std::move(m));
  }
  return d;
}

/// M(y) = sum_j M_j phi_j(y).
inline Matrix eval_dickson(const DicksonSystem &d, Complex y)
{
  const auto basis = phi_all(d.k + 1, y);
  Matrix out = Matrix::Zero(2 * d.n, 2 * d.n);
  for (int j = 0; j <= d.k + 1; ++j)
  {
    out += basis[j] * d.M[j];
  }
  return out;
}

/// Evaluates sum_j coeffs_j phi_j(y) for any coefficient list in the Dickson
/// basis (e.g. the output of pure_palindromic_coeffs).
inline Matrix eval_dickson_series(const MatrixList &coeffs, Complex y)
{
  if (coeffs.empty())
  {
    throw ShapeMismatch("eval_dickson_series: empty coefficient list");
  }
  const auto basis = phi_all(static_cast<int>(coeffs.size()) - 1, y);
  Matrix out = Matrix::Zero(coeffs.front().rows(), coeffs.front().cols());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
  {
    out += basis[j] * coeffs[j];
  }
  return out;
}

}  // namespace tpal
