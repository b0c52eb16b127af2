// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace tpal;
using tpal::testing::matching_distance;
using tpal::testing::random_complex;
using tpal::testing::rel_err;

namespace
{

PalindromicPolynomial scalar(std::vector<double> a)
{
  MatrixList m;
  for (double v : a)
  {
    m.push_back(Matrix::Constant(1, 1, v));
  }
  return PalindromicPolynomial(m);
}

}  // namespace

TEST(DetPoly, ScalarH)
{
  const auto q = oracle::det_poly(gen_h(1, 2));
  ASSERT_EQ(q.c.size(), 5u);
  const double want[] = {1.0, 1.0, 0.0, 1.0, 1.0};
  for (int i = 0; i < 5; ++i)
  {
    EXPECT_LT(std::abs(q.c[i] - want[i]), 1e-14) << i;
  }
}

TEST(DetPoly, DiagonalIsProduct)
{
  // diag(l + 2 + 1/l, l - 3 + 1/l): l^2 det = (l^2 + 2 l + 1)(l^2 - 3 l + 1).
  Matrix a0 = Matrix::Zero(2, 2), a1 = Matrix::Zero(2, 2);
  a0(0, 0) = 2.0;
  a0(1, 1) = -3.0;
  a1(0, 0) = 1.0;
  a1(1, 1) = 1.0;
  const auto q = oracle::det_poly(PalindromicPolynomial({a0, a1}));
  const double want[] = {1.0, -1.0, -4.0, -1.0, 1.0};
  for (int i = 0; i < 5; ++i)
  {
    EXPECT_LT(std::abs(q.c[i] - want[i]), 1e-13) << i;
  }
}

TEST(DetPoly, IsPalindromic)
{
  for (int trial = 0; trial < 10; ++trial)
  {
    const auto p = gen_random(1 + trial % 3, 1 + trial % 4, 60 + trial);
    const auto q = oracle::det_poly(p);
    double big = 0.0;
    for (const auto &v : q.c)
    {
      big = std::max(big, std::abs(v));
    }
    const int d = q.degree();
    EXPECT_EQ(d, 2 * p.n() * p.k());
    for (int i = 0; i <= d; ++i)
    {
      EXPECT_LE(std::abs(q.c[i] - q.c[d - i]), 1e-10 * big);
    }
  }
}

TEST(DetPoly, MatchesPointwiseDeterminant)
{
  std::mt19937_64 rng(3);
  const auto p = gen_random(3, 2, 5);
  const auto q = oracle::det_poly(p);
  for (int s = 0; s < 5; ++s)
  {
    const Complex lambda = tpal::testing::random_lambda(rng, 0.5, 2.0, 0.0);
    const Complex want = std::pow(lambda, 3 * 2) * oracle::det_dense(eval_laurent(p, lambda));
    EXPECT_LT(rel_err(q(lambda), want), 1e-11);
  }
}

TEST(ScalarAberth, Examples)
{
  auto r = oracle::scalar_aberth({{1.0, 0.0, 1.0}});
  EXPECT_LT(matching_distance(r.roots, {Complex(0, 1), Complex(0, -1)}), 1e-14);
  r = oracle::scalar_aberth({{-6.0, 11.0, -6.0, 1.0}});
  EXPECT_LT(matching_distance(r.roots, {1.0, 2.0, 3.0}), 1e-10);
  for (char c : r.converged)
  {
    EXPECT_TRUE(c);
  }
  r = oracle::scalar_aberth({{3.0, 2.0}});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0], Complex(-1.5));
  EXPECT_THROW(oracle::scalar_aberth({{3.0}}), ShapeMismatch);
}

TEST(ScalarAberth, RandomPolynomial)
{
  std::mt19937_64 rng(4);
  std::vector<Complex> roots;
  for (int i = 0; i < 12; ++i)
  {
    roots.push_back(random_complex(rng, -2.0, 2.0));
  }
  oracle::ScalarPoly q{{1.0}};
  for (const auto &r : roots)
  {
    std::vector<Complex> next(q.c.size() + 1, 0.0);
    for (std::size_t i = 0; i < q.c.size(); ++i)
    {
      next[i + 1] += q.c[i];
      next[i] -= r * q.c[i];
    }
    q.c = next;
  }
  EXPECT_LT(matching_distance(oracle::scalar_aberth(q).roots, roots), 1e-8);
}

TEST(ReferenceSpectrum, HFamily)
{
  const auto ref = oracle::reference_spectrum(gen_h(1, 2));
  EXPECT_TRUE(ref.complete);
  const std::vector<Complex> want = {-1.0, -1.0, std::polar(1.0, M_PI / 3.0),
                                     std::polar(1.0, -M_PI / 3.0)};
  EXPECT_LT(matching_distance(ref.lambdas, want), 1e-6);
  // The double root -1 is resolved to about sqrt(eps), and so is its y.
  EXPECT_LT(matching_distance(ref.y, {-2.0, 1.0}), 1e-7);
}

TEST(ReferenceSpectrum, ScalarDegreeOne)
{
  const auto ref = oracle::reference_spectrum(scalar({1.0, 1.0}));
  const std::vector<Complex> want = {std::polar(1.0, 2.0 * M_PI / 3.0),
                                     std::polar(1.0, -2.0 * M_PI / 3.0)};
  EXPECT_LT(matching_distance(ref.lambdas, want), 1e-13);
}

TEST(ReferenceSpectrum, RandomCountsAndPairs)
{
  const auto ref = oracle::reference_spectrum(gen_random(2, 2, 1));
  EXPECT_TRUE(ref.complete);
  EXPECT_EQ(ref.lambdas.size(), 8u);
  EXPECT_EQ(ref.y.size(), 4u);
  EXPECT_LE(ref.pairing_residual, 1e-8);
}

TEST(ReferenceSpectrum, DeficientDegreeIsFlagged)
{
  // Leading coefficient singular: det(l^k P) loses its top and bottom terms.
  Matrix a0 = Matrix::Identity(2, 2);
  Matrix a1 = Matrix::Zero(2, 2);
  a1(0, 0) = 1.0;
  const auto ref = oracle::reference_spectrum(PalindromicPolynomial({a0, a1}));
  EXPECT_FALSE(ref.complete);
  EXPECT_EQ(ref.lambdas.size(), 2u);
}

TEST(PairReciprocals, Failure)
{
  EXPECT_THROW(oracle::pair_reciprocals({2.0, 3.0}), PairingFailure);
  EXPECT_THROW(oracle::pair_reciprocals({2.0, 0.5, 3.0}), PairingFailure);
  const auto ok = oracle::pair_reciprocals({2.0, 3.0, 0.5, 1.0 / 3.0});
  EXPECT_LT(ok.pairing_residual, 1e-15);
}

TEST(LogdetDerivative, Examples)
{
  const auto d = dickson_transform(scalar({1.0, 1.0}));
  EXPECT_LT(std::abs(oracle::logdet_derivative_check(d, 1.0) - 1.0), 1e-8);
  const auto c = dickson_transform(tpal::testing::counterexample(1.0));
  EXPECT_LT(std::abs(oracle::logdet_derivative_check(c, 3.0) - 2.5), 1e-6);
  EXPECT_THROW(oracle::logdet_derivative_check(c, 2.0), EvaluationSingular);
}

TEST(EvalM, AgreesWithDicksonEvaluation)
{
  const auto d = dickson_transform(gen_random(2, 5, 3));
  const Complex y(0.9, -0.2);
  EXPECT_LT(rel_err(oracle::eval_m(d, y), eval_dickson(d, y)), 1e-14);
}

TEST(Residual, Examples)
{
  const auto h = gen_h(1, 2);
  EXPECT_LE(oracle::residual(h, std::polar(1.0, M_PI / 3.0)), 1e-12);
  EXPECT_LE(oracle::residual(h, -1.0), 1e-12);
  EXPECT_GE(oracle::residual(h, 10.0), 1e-1);
  EXPECT_THROW(oracle::residual(h, 0.0), ZeroArgument);
  std::mt19937_64 rng(6);
  const auto p = gen_random(3, 3, 8);
  for (int s = 0; s < 10; ++s)
  {
    const Complex lambda = tpal::testing::random_lambda(rng, 0.3, 3.0, 0.0);
    const double a = oracle::residual(p, lambda);
    const double b = oracle::residual(p, 1.0 / lambda);
    EXPECT_LE(std::max(a, b), 2.0 * std::min(a, b));
  }
}

TEST(Factorization, SquareOfReferencePolynomial)
{
  // det M(y) = p(y)^2 with p(y) = c * prod (y - y_j) over the reference y-roots.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial)
  {
    const auto p = gen_random(2, 2 + trial % 2, 20 + trial);
    const auto ref = oracle::reference_spectrum(p);
    ASSERT_TRUE(ref.complete);
    const auto d = dickson_transform(p);
    std::vector<Complex> ratio;
    for (int s = 0; s < 5; ++s)
    {
      const Complex y = random_complex(rng, -3.0, 3.0);
      Complex prod = 1.0;
      for (const auto &r : ref.y)
      {
        prod *= y - r;
      }
      ratio.push_back(oracle::det_dense(eval_dickson(d, y)) / (prod * prod));
    }
    for (int s = 1; s < 5; ++s)
    {
      EXPECT_LT(rel_err(ratio[s], ratio[0]), 1e-6) << "trial " << trial;
    }
  }
}
