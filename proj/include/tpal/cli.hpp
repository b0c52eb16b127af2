// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Subcommands of the `tpal` tool, callable without going through argv.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tpal/tpal.hpp"

namespace tpal::cli
{

enum ExitCode : int
{
  kOk = 0,
  kInputError = 1,
  kNotConverged = 2,
  kResidualTooLarge = 3,
  kPairingFailure = 4,
};

inline constexpr double kCheckThreshold = 1e-6;

struct SolveArgs
{
  std::string input;
  std::string out;  // empty: stdout
  std::optional<std::string> history;
  double tol = 1e-13;
  std::optional<int> maxit;
  std::optional<int> ellipses;
  std::optional<int> axis;
  std::uint64_t seed = 0;
  bool jacobi = false;
  int threads = 1;
};

struct GenArgs
{
  std::string kind;
  int n = 1;
  int k = 1;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
};

struct CheckArgs
{
  std::string input;
  std::string results;
};

struct OracleArgs
{
  std::string input;
  std::string out;
};

namespace detail
{

inline PalindromicPolynomial load(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError("cannot open '" + path + "'");
  }
  try
  {
    return io::read_coefficients(in);
  }
  catch (const ParseError &e)
  {
    throw ParseError(path + ": " + e.what());
  }
}

// Writes to `path`, or to `fallback` if the path is empty.
template <typename Fn>
void emit(const std::string &path, std::ostream &fallback, Fn &&fn)
{
  if (path.empty())
  {
    fn(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw ParseError("cannot write '" + path + "'");
  }
  fn(out);
  if (!out)
  {
    throw ParseError("write to '" + path + "' failed");
  }
}

}  // namespace detail

inline int cmd_solve(const SolveArgs &args, std::ostream &out = std::cout,
                     std::ostream &err = std::cerr)
{
  try
  {
    const PalindromicPolynomial p = detail::load(args.input);
    SolveOptions opts;
    opts.tol = args.tol;
    opts.maxit = args.maxit;
    opts.seed = args.seed;
    opts.jacobi = args.jacobi;
    opts.threads = args.threads;
    opts.record_history = args.history.has_value();
    if (args.ellipses || args.axis)
    {
      StartConfig cfg = choose_params(p.n() * p.k(), p.n(), p.k(), args.seed);
      if (args.ellipses)
      {
        cfg.a = *args.ellipses;
      }
      if (args.axis)
      {
        cfg.b = *args.axis;
      }
      opts.start = cfg;
    }
    const SpectrumResult res = solve(p, opts);
    detail::emit(args.out, out, [&](std::ostream &os) { io::write_results(os, res); });
    if (args.history)
    {
      detail::emit(*args.history, out, [&](std::ostream &os) { io::write_history(os, res); });
    }
    int unconverged = 0;
    for (const auto &rec : res.y_roots)
    {
      unconverged += rec.status == RootStatus::maxit ? 1 : 0;
    }
    err << "tpal solve: N = " << res.y_roots.size() << ", sweeps = " << res.diagnostics.sweeps
        << ", trace calls = " << res.diagnostics.trace_calls << ", unconverged = " << unconverged;
    if (res.diagnostics.diverged > 0)
    {
      err << ", |y| > 1e8: " << res.diagnostics.diverged;
    }
    err << '\n';
    return unconverged > 0 ? kNotConverged : kOk;
  }
  catch (const Error &e)
  {
    err << "tpal solve: " << e.what() << '\n';
    return kInputError;
  }
}

inline int cmd_gen(const GenArgs &args, std::ostream &out = std::cout,
                   std::ostream &err = std::cerr)
{
  try
  {
    std::optional<PalindromicPolynomial> p;
    if (args.kind == "h")
    {
      p = gen_h(args.n, args.k);
    }
    else if (args.kind == "random")
    {
      p = gen_random(args.n, args.k, args.seed);
    }
    else
    {
      err << "tpal gen: unknown kind '" << args.kind << "' (expected h or random)\n";
      return kInputError;
    }
    detail::emit(args.out, out, [&](std::ostream &os) { io::write_coefficients(os, *p); });
    return kOk;
  }
  catch (const Error &e)
  {
    err << "tpal gen: " << e.what() << '\n';
    return kInputError;
  }
}

inline int cmd_check(const CheckArgs &args, std::ostream &out = std::cout,
                     std::ostream &err = std::cerr)
{
  try
  {
    const PalindromicPolynomial p = detail::load(args.input);
    std::ifstream in(args.results);
    if (!in)
    {
      throw ParseError("cannot open '" + args.results + "'");
    }
    const auto rows = io::read_results(in);
    const std::size_t expected = 2 * static_cast<std::size_t>(p.n()) * p.k();
    if (rows.size() != expected)
    {
      err << "tpal check: " << args.results << " has " << rows.size() << " rows, expected "
          << expected << " for n = " << p.n() << ", k = " << p.k() << '\n';
      return kInputError;
    }
    double worst = 0.0;
    int worst_index = 0;
    for (const auto &row : rows)
    {
      if (row.status == "synthetic")
      {
        continue;
      }
      const double r =
          row.lambda == Complex(0.0) ? std::numeric_limits<double>::infinity()
                                     : oracle::residual(p, row.lambda);
      if (!(r <= worst))
      {
        worst = r;
        worst_index = row.index;
      }
    }
    out << "max residual " << io::format_double(worst) << " at row " << worst_index << '\n';
    return worst <= kCheckThreshold ? kOk : kResidualTooLarge;
  }
  catch (const Error &e)
  {
    err << "tpal check: " << e.what() << '\n';
    return kInputError;
  }
}

inline int cmd_oracle(const OracleArgs &args, std::ostream &out = std::cout,
                      std::ostream &err = std::cerr)
{
  try
  {
    const PalindromicPolynomial p = detail::load(args.input);
    const auto ref = oracle::reference_spectrum(p);
    if (!ref.complete)
    {
      err << "tpal oracle: only " << ref.lambdas.size() << " of " << 2 * p.n() * p.k()
          << " eigenvalues are finite and nonzero\n";
    }
    detail::emit(args.out, out, [&](std::ostream &os) { io::write_reference(os, ref); });
    return kOk;
  }
  catch (const PairingFailure &e)
  {
    err << "tpal oracle: " << e.what() << '\n';
    return kPairingFailure;
  }
  catch (const Error &e)
  {
    err << "tpal oracle: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace tpal::cli
