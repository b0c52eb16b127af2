// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include "tpal/cli.hpp"

int main(int argc, char **argv)
{
  CLI::App app{"Eigenvalues of T-palindromic matrix polynomials"};
  app.require_subcommand(1);

  tpal::cli::SolveArgs solve;
  auto *s = app.add_subcommand("solve", "Compute all eigenvalues of a coefficient file");
  s->add_option("input", solve.input, "Coefficient file")->required();
  s->add_option("--out,-o", solve.out, "Result CSV (default: stdout)");
  s->add_option("--tol", solve.tol, "Stopping tolerance")->capture_default_str();
  s->add_option("--maxit", solve.maxit, "Maximum number of sweeps (default max(2nk, 50))");
  s->add_option("--ellipses", solve.ellipses, "Number of starting ellipses a");
  s->add_option("--axis", solve.axis, "Axis parameter b");
  s->add_option("--seed", solve.seed, "Seed for the starting phase")->capture_default_str();
  s->add_option("--history", solve.history, "Per-sweep convergence CSV");
  s->add_flag("--jacobi", solve.jacobi, "Jacobi ordering (corrections from the previous sweep)");
  s->add_option("--threads", solve.threads, "Worker threads in Jacobi mode")
      ->check(CLI::PositiveNumber);

  tpal::cli::GenArgs gen;
  auto *g = app.add_subcommand("gen", "Write a test polynomial");
  g->add_option("kind", gen.kind, "h or random")->required();
  g->add_option("--n", gen.n, "Block size")->required();
  g->add_option("--k", gen.k, "Laurent degree")->required();
  g->add_option("--seed", gen.seed, "Seed for random")->capture_default_str();
  g->add_option("-o,--out", gen.out, "Output file (default: stdout)");

  tpal::cli::CheckArgs check;
  auto *c = app.add_subcommand("check", "Residuals of a result file");
  c->add_option("input", check.input, "Coefficient file")->required();
  c->add_option("results", check.results, "Result CSV")->required();

  tpal::cli::OracleArgs oracle;
  auto *o = app.add_subcommand("oracle", "Reference spectrum from det interpolation");
  o->add_option("input", oracle.input, "Coefficient file")->required();
  o->add_option("-o,--out", oracle.out, "Output CSV (default: stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return tpal::cli::kInputError;
  }

  if (s->parsed())
  {
    return tpal::cli::cmd_solve(solve);
  }
  if (g->parsed())
  {
    return tpal::cli::cmd_gen(gen);
  }
  if (c->parsed())
  {
    return tpal::cli::cmd_check(check);
  }
  return tpal::cli::cmd_oracle(oracle);
}
