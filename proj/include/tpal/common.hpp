// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tpal
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using MatrixList = std::vector<Matrix>;

// Error hierarchy. Every failure raised by the library derives from Error so
// callers can catch broadly and still inspect the concrete kind.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define TPAL_DEFINE_ERROR(Name)             \
  class Name : public Error                 \
  {                                         \
  public:                                   \
    using Error::Error;                     \
  }

TPAL_DEFINE_ERROR(ShapeMismatch);
TPAL_DEFINE_ERROR(ZeroArgument);
TPAL_DEFINE_ERROR(DegreeParity);
TPAL_DEFINE_ERROR(DegreeTooSmall);
TPAL_DEFINE_ERROR(NotPurelyPalindromic);
TPAL_DEFINE_ERROR(InvalidConfig);
TPAL_DEFINE_ERROR(EvaluationSingular);
TPAL_DEFINE_ERROR(ParseError);

#undef TPAL_DEFINE_ERROR

class NotPalindromic : public Error
{
public:
  NotPalindromic(const std::string &what, double deviation, int index)
    : Error(what), max_deviation(deviation), offending_index(index)
  {
  }

  double max_deviation;
  int offending_index;
};

class PairingFailure : public Error
{
public:
  PairingFailure(const std::string &what, double residual) : Error(what), residual(residual) {}

  double residual;
};

// Max row sum of absolute values.
inline double norm_inf(const Matrix &a)
{
  if (a.size() == 0)
  {
    return 0.0;
  }
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

inline bool all_finite(const Matrix &a)
{
  for (Eigen::Index j = 0; j < a.cols(); ++j)
  {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
    {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
      {
        return false;
      }
    }
  }
  return true;
}

// Dense LU with partial pivoting (row interchanges), P A = L U stored in place.
// Exact zero pivots are reported through singular() instead of producing
// infinities, so callers can treat them as a hit on an eigenvalue.
class PivotedLU
{
public:
  explicit PivotedLU(Matrix a) : lu_(std::move(a)), perm_(lu_.rows())
  {
    const Eigen::Index n = lu_.rows();
    if (lu_.cols() != n)
    {
      throw ShapeMismatch("PivotedLU: matrix is not square");
    }
    for (Eigen::Index i = 0; i < n; ++i)
    {
      perm_[i] = i;
    }
    for (Eigen::Index j = 0; j < n; ++j)
    {
      Eigen::Index p = j;
      double best = std::abs(lu_(j, j));
      for (Eigen::Index i = j + 1; i < n; ++i)
      {
        const double v = std::abs(lu_(i, j));
        if (v > best)
        {
          best = v;
          p = i;
        }
      }
      if (best == 0.0)
      {
        singular_ = true;
        continue;
      }
      if (p != j)
      {
        lu_.row(p).swap(lu_.row(j));
        std::swap(perm_[p], perm_[j]);
        sign_ = -sign_;
      }
      const Complex pivot = lu_(j, j);
      for (Eigen::Index i = j + 1; i < n; ++i)
      {
        lu_(i, j) /= pivot;
      }
      const Eigen::Index rest = n - j - 1;
      if (rest > 0)
      {
        lu_.bottomRightCorner(rest, rest).noalias() -=
            lu_.col(j).tail(rest) * lu_.row(j).tail(rest);
      }
    }
  }

  bool singular() const { return singular_; }
  Eigen::Index size() const { return lu_.rows(); }

  Complex determinant() const
  {
    Complex d = static_cast<double>(sign_);
    for (Eigen::Index i = 0; i < lu_.rows(); ++i)
    {
      d *= lu_(i, i);
    }
    return d;
  }

  // Solves A X = B. Undefined if singular().
  Matrix solve(const Matrix &b) const
  {
    const Eigen::Index n = lu_.rows();
    Matrix x(n, b.cols());
    for (Eigen::Index i = 0; i < n; ++i)
    {
      x.row(i) = b.row(perm_[i]);
    }
    for (Eigen::Index j = 0; j < x.cols(); ++j)
    {
      auto col = x.col(j);
      for (Eigen::Index i = 1; i < n; ++i)
      {
        col(i) -= (lu_.row(i).head(i) * col.head(i))(0, 0);
      }
      for (Eigen::Index i = n - 1; i >= 0; --i)
      {
        Complex s = col(i);
        if (i + 1 < n)
        {
          s -= (lu_.row(i).tail(n - i - 1) * col.tail(n - i - 1))(0, 0);
        }
        col(i) = s / lu_(i, i);
      }
    }
    return x;
  }

  Matrix inverse() const { return solve(Matrix::Identity(lu_.rows(), lu_.rows())); }

private:
  Matrix lu_;
  std::vector<Eigen::Index> perm_;
  int sign_ = 1;
  bool singular_ = false;
};

}  // namespace tpal
