// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "tpal/dickson.hpp"

namespace tpal
{

/// Implicit pencil L(y) = y E + F of order 2n(k+1) linearizing
/// M(y) = sum_{j=0}^{k+1} M_j phi_j(y):
///
///   E = blockdiag(I, ..., I, M_{k+1})
///   F = [ 0  -2I                               ]
///       [-I   0  -I                            ]
///       [      .   .    .                      ]
///       [         -I    0            -I        ]
///       [M_0 M_1 ... M_{k-2} M_{k-1}-M_{k+1} M_k]
///
/// The solver never assembles it; densify() is for verification only. The
/// referenced DicksonSystem must outlive the pencil.
class StructuredPencil
{
public:
  explicit StructuredPencil(const DicksonSystem &system) : system_(&system) {}

  const DicksonSystem &system() const { return *system_; }
  int block() const { return 2 * system_->n; }
  int block_count() const { return system_->k + 1; }
  int dimension() const { return block() * block_count(); }

  Matrix densify(Complex y) const
  {
    const int b = block();
    const int k = system_->k;
    const auto &m = system_->M;
    const Matrix eye = Matrix::Identity(b, b);
    Matrix out = Matrix::Zero(dimension(), dimension());
    auto at = [&](int row, int col) { return out.block(row * b, col * b, b, b); };

    for (int r = 0; r < k; ++r)
    {
      at(r, r) = y * eye;
      if (r > 0)
      {
        at(r, r - 1) = -eye;
      }
      at(r, r + 1) = (r == 0 ? -2.0 : -1.0) * eye;
    }
    for (int c = 0; c <= k; ++c)
    {
      at(k, c) = m[c];
    }
    at(k, k - 1) -= m[k + 1];
    at(k, k) += y * m[k + 1];
    return out;
  }

  Matrix E() const
  {
    const int b = block();
    Matrix out = Matrix::Identity(dimension(), dimension());
    out.bottomRightCorner(b, b) = system_->M[system_->k + 1];
    return out;
  }

  Matrix F() const { return densify(Complex(0.0)); }

private:
  const DicksonSystem *system_;
};

inline StructuredPencil build_pencil(const DicksonSystem &system)
{
  return StructuredPencil(system);
}

inline Matrix densify(const StructuredPencil &pencil, Complex y)
{
  return pencil.densify(y);
}

}  // namespace tpal
