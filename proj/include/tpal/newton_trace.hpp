// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "tpal/dickson.hpp"

namespace tpal
{

/// Outcome of one evaluation of the trace kernel at a point y.
///
/// eta      (det M)'(y) / det M(y), i.e. trace(L(y)^{-1} E). The Newton
///          correction for p(y) with p^2 = det M is 2 / eta.
/// eta_hat  backward-error estimate sqrt(2n) / (||Mhat_k^{-1}||_inf (1 + |y|)).
/// singular y hit an eigenvalue of the pencil exactly (or underflowed).
struct NewtonStep
{
  Complex eta{0.0, 0.0};
  double eta_hat = 0.0;
  bool singular = false;
};

/// Unitary rotation G(theta, psi) = [[theta, psi], [-conj(psi), conj(theta)]]
/// that, applied from the right to the row [a, b], yields [r, 0] with r >= 0.
struct PlaneRotation
{
  Complex theta{1.0, 0.0};
  Complex psi{0.0, 0.0};
  double r = 0.0;

  Complex g11() const { return theta; }
  Complex g12() const { return psi; }
  Complex g21() const { return -std::conj(psi); }
  Complex g22() const { return std::conj(theta); }
};

inline PlaneRotation plane_rotation(Complex a, Complex b)
{
  PlaneRotation g;
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (r == 0.0)
  {
    return g;
  }
  g.theta = std::conj(a) / r;
  g.psi = -b / r;
  g.r = r;
  return g;
}

/// Block LQ factorization of L(y) = Ltilde Q by k Givens rotations acting on
/// adjacent block columns, followed by the diagonal balancing that removes
/// the products of the psi_j from the first block row of L^{-1}.
///
/// Ltilde has scalar bands alpha (diagonal), beta (first subdiagonal), gamma
/// (second subdiagonal) in block rows 1..k, and the matrix row Mhat_0..Mhat_k
/// as its last block row. After balancing, beta, gamma and Mhat_0..Mhat_{k-1}
/// hold the entries of D Ltilde D^{-1}.
struct FactorizationState
{
  std::vector<Complex> alpha;         // alpha_1..alpha_k at indices 0..k-1
  std::vector<Complex> beta;          // beta_1..beta_{k-1}
  std::vector<Complex> gamma;         // gamma_1..gamma_{k-2}
  std::vector<PlaneRotation> rotations;
  MatrixList row;                     // Mhat_0..Mhat_k (balanced)
  bool breakdown = false;             // some alpha_j vanished
};

namespace detail
{

constexpr double kAlphaFloor = 1e-300;

// Working copies only; the DicksonSystem is never modified.
inline FactorizationState factorize(const DicksonSystem &d, Complex y)
{
  const int k = d.k;
  FactorizationState st;
  st.row.assign(d.M.begin(), d.M.begin() + k + 1);
  const Matrix &lead = d.M[k + 1];
  st.row[k - 1] -= lead;
  st.row[k] += y * lead;

  // Scalar bands, one slot past the end so the last sweep step can write
  // into the (unused) scalar part of the matrix row.
  std::vector<Complex> alpha(k + 1, y);
  std::vector<Complex> beta(k + 1, Complex(-1.0));
  std::vector<Complex> gamma(k, Complex(0.0));
  std::vector<Complex> chi(k + 1, Complex(-1.0));
  chi[0] = -2.0;

  st.rotations.reserve(k);
  for (int j = 0; j < k; ++j)
  {
    const PlaneRotation g = plane_rotation(alpha[j], chi[j]);
    st.rotations.push_back(g);

    alpha[j] = alpha[j] * g.g11() + chi[j] * g.g21();
    const Complex b = beta[j] * g.g11() + alpha[j + 1] * g.g21();
    alpha[j + 1] = beta[j] * g.g12() + alpha[j + 1] * g.g22();
    beta[j] = b;
    if (j + 1 < k)
    {
      gamma[j] = beta[j + 1] * g.g21();
      beta[j + 1] = beta[j + 1] * g.g22();
    }

    Matrix left = g.g11() * st.row[j] + g.g21() * st.row[j + 1];
    st.row[j + 1] = g.g12() * st.row[j] + g.g22() * st.row[j + 1];
    st.row[j] = std::move(left);
  }

  for (int j = 0; j < k; ++j)
  {
    if (std::abs(alpha[j]) < kAlphaFloor)
    {
      st.breakdown = true;
    }
  }

  // D Ltilde D^{-1} with D = diag(1, psi_1, psi_1 psi_2, ...).
  for (int j = 0; j + 1 < k; ++j)
  {
    beta[j] *= st.rotations[j].psi;
  }
  for (int j = 0; j + 2 < k; ++j)
  {
    gamma[j] *= st.rotations[j].psi * st.rotations[j + 1].psi;
  }
  Complex s = 1.0;
  for (int j = k - 1; j >= 0; --j)
  {
    s *= st.rotations[j].psi;
    st.row[j] *= s;
  }

  st.alpha.assign(alpha.begin(), alpha.begin() + k);
  st.beta.assign(beta.begin(), beta.begin() + std::max(k - 1, 0));
  st.gamma.assign(gamma.begin(), gamma.begin() + std::max(k - 2, 0));
  return st;
}

}  // namespace detail

/// Logarithmic derivative of det M at y via the Jacobi formula
/// (det L)' / det L = trace(L^{-1} E), using only 2n x 2n block operations:
/// O(n^2 k) for the rotations and back substitution plus O(n^3) for the
/// final solve with Mhat_k.
inline NewtonStep trace_correction(const DicksonSystem &d, Complex y)
{
  NewtonStep out;
  const int k = d.k;
  const FactorizationState st = detail::factorize(d, y);
  if (st.breakdown)
  {
    out.singular = true;
    return out;
  }

  const Matrix &last = st.row[k];
  const PivotedLU lu(last);
  if (lu.singular())
  {
    out.singular = true;
    return out;
  }

  // Solve (theta_1, ..., theta_k, 1) (x) Mhat_k = (X_1, ..., X_{k+1}) Lhat
  // backwards for X_k, ..., X_1 (X_{k+1} = Mhat_k drops out).
  const auto c = [&](int j) { return st.rotations[j].theta; };  // theta_{j+1}
  MatrixList x(static_cast<std::size_t>(k));
  for (int j = k - 1; j >= 0; --j)
  {
    Matrix rhs = c(j) * last - st.row[j];
    if (j + 1 < k)
    {
      rhs -= st.beta[j] * x[j + 1];
    }
    if (j + 2 < k)
    {
      rhs -= st.gamma[j] * x[j + 2];
    }
    x[j] = rhs / st.alpha[j];
  }

  Matrix acc = x[0];
  for (int j = 1; j < k; ++j)
  {
    acc += std::conj(c(j - 1)) * x[j];
  }
  acc += std::conj(c(k - 1)) * d.M[k + 1];

  out.eta = lu.solve(acc).trace();
  const double inv_norm = norm_inf(lu.inverse());
  out.eta_hat = std::sqrt(2.0 * d.n) / (inv_norm * (1.0 + std::abs(y)));
  if (!std::isfinite(out.eta.real()) || !std::isfinite(out.eta.imag()))
  {
    out.singular = true;
  }
  return out;
}

}  // namespace tpal
