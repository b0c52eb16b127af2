// Copyright 2026 The tpal Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Text formats used by the command-line tool.
//
// Coefficient file:
//   TPAL 1
//   n k
//   k+1 blocks A_0..A_k, each n lines of 2n numbers (re im re im ...).
// Blank lines and lines starting with '#' are ignored anywhere.
//
// Result file (CSV):
//   index,re_lambda,im_lambda,re_y,im_y,eta_hat,sweeps,status
// one row per eigenvalue, rows 2j-1 and 2j sharing the same y.

#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "tpal/aberth.hpp"
#include "tpal/oracle.hpp"
#include "tpal/polynomial.hpp"

namespace tpal::io
{

inline constexpr std::string_view kMagic = "TPAL 1";
inline constexpr std::string_view kResultHeader =
    "index,re_lambda,im_lambda,re_y,im_y,eta_hat,sweeps,status";

/// Shortest form that still round-trips: 17 significant digits.
inline std::string format_double(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail
{

struct Token
{
  std::string_view text;
  int column;  // 1-based
};

inline std::vector<Token> split_ws(std::string_view line)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size())
  {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
    {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
    {
      ++i;
    }
    if (i > start)
    {
      out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }
  return out;
}

[[noreturn]] inline void fail(int line, int column, const std::string &msg)
{
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                   ": " + msg);
}

inline double parse_number(const Token &tok, int line)
{
  double v = 0.0;
  const char *first = tok.text.data();
  const char *last = first + tok.text.size();
  if (!tok.text.empty() && *first == '+')
  {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
  {
    fail(line, tok.column, "not a number: '" + std::string(tok.text) + "'");
  }
  if (!std::isfinite(v))
  {
    fail(line, tok.column, "non-finite value");
  }
  return v;
}

inline int parse_positive(const Token &tok, int line, const char *what)
{
  int v = 0;
  const char *first = tok.text.data();
  const char *last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v < 1)
  {
    fail(line, tok.column, std::string(what) + " must be a positive integer, got '" +
                               std::string(tok.text) + "'");
  }
  return v;
}

}  // namespace detail

inline PalindromicPolynomial read_coefficients(std::istream &in)
{
  struct Line
  {
    int number;
    std::string text;
  };
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw))
  {
    ++number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#')
    {
      continue;
    }
    lines.push_back({number, raw});
  }

  std::size_t cursor = 0;
  if (lines.empty())
  {
    detail::fail(number + 1, 1, "empty file, expected '" + std::string(kMagic) + "'");
  }
  {
    const auto tokens = detail::split_ws(lines[0].text);
    if (tokens.size() != 2 || tokens[0].text != "TPAL" || tokens[1].text != "1")
    {
      detail::fail(lines[0].number, 1, "expected header '" + std::string(kMagic) + "'");
    }
    ++cursor;
  }
  if (cursor >= lines.size())
  {
    detail::fail(number + 1, 1, "missing 'n k' line");
  }
  const auto dims = detail::split_ws(lines[cursor].text);
  if (dims.size() != 2)
  {
    detail::fail(lines[cursor].number, 1, "expected 'n k'");
  }
  const int n = detail::parse_positive(dims[0], lines[cursor].number, "n");
  const int k = detail::parse_positive(dims[1], lines[cursor].number, "k");
  ++cursor;

  MatrixList coeffs;
  for (int j = 0; j <= k; ++j)
  {
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
    {
      if (cursor >= lines.size())
      {
        detail::fail(number + 1, 1,
                     "unexpected end of file in block A_" + std::to_string(j) + ", row " +
                         std::to_string(r + 1));
      }
      const auto &line = lines[cursor++];
      const auto tokens = detail::split_ws(line.text);
      if (static_cast<int>(tokens.size()) != 2 * n)
      {
        const int col = tokens.size() > static_cast<std::size_t>(2 * n)
                            ? tokens[2 * n].column
                            : static_cast<int>(line.text.size()) + 1;
        detail::fail(line.number, col,
                     "expected " + std::to_string(2 * n) + " numbers, found " +
                         std::to_string(tokens.size()));
      }
      for (int c = 0; c < n; ++c)
      {
        const double re = detail::parse_number(tokens[2 * c], line.number);
        const double im = detail::parse_number(tokens[2 * c + 1], line.number);
        a(r, c) = Complex(re, im);
      }
    }
    coeffs.push_back(std::move(a));
  }
  if (cursor < lines.size())
  {
    detail::fail(lines[cursor].number, 1, "trailing data after A_" + std::to_string(k));
  }
  return PalindromicPolynomial(std::move(coeffs));
}

inline void write_coefficients(std::ostream &out, const PalindromicPolynomial &p)
{
  out << kMagic << '\n' << p.n() << ' ' << p.k() << '\n';
  for (int j = 0; j <= p.k(); ++j)
  {
    out << "# A_" << j << '\n';
    const Matrix &a = p.coeff(j);
    for (int r = 0; r < p.n(); ++r)
    {
      for (int c = 0; c < p.n(); ++c)
      {
        if (c > 0)
        {
          out << ' ';
        }
        out << format_double(a(r, c).real()) << ' ' << format_double(a(r, c).imag());
      }
      out << '\n';
    }
  }
}

struct ResultRow
{
  int index = 0;
  Complex lambda;
  Complex y;
  double eta_hat = 0.0;
  int sweeps = 0;
  std::string status;
};

inline void write_row(std::ostream &out, const ResultRow &row)
{
  out << row.index << ',' << format_double(row.lambda.real()) << ','
      << format_double(row.lambda.imag()) << ',' << format_double(row.y.real()) << ','
      << format_double(row.y.imag()) << ',' << format_double(row.eta_hat) << ',' << row.sweeps
      << ',' << row.status << '\n';
}

inline void write_results(std::ostream &out, const SpectrumResult &res)
{
  out << kResultHeader << '\n';
  for (std::size_t j = 0; j < res.y_roots.size(); ++j)
  {
    const RootRecord &rec = res.y_roots[j];
    for (int s = 0; s < 2; ++s)
    {
      ResultRow row;
      row.index = static_cast<int>(2 * j) + s + 1;
      row.lambda = res.lambdas[2 * j + s];
      row.y = rec.value;
      row.eta_hat = rec.eta_hat;
      row.sweeps = rec.sweeps_used;
      row.status = to_string(rec.status);
      write_row(out, row);
    }
  }
}

/// Oracle spectrum in result-file layout: eta_hat is NaN, status "oracle".
inline void write_reference(std::ostream &out, const oracle::ReferenceSpectrum &ref)
{
  out << kResultHeader << '\n';
  for (std::size_t i = 0; i < ref.lambdas.size(); ++i)
  {
    ResultRow row;
    row.index = static_cast<int>(i) + 1;
    row.lambda = ref.lambdas[i];
    row.y = ref.y[i / 2];
    row.eta_hat = std::numeric_limits<double>::quiet_NaN();
    row.status = "oracle";
    write_row(out, row);
  }
}

inline void write_history(std::ostream &out, const SpectrumResult &res)
{
  out << "sweep,root,re,im\n";
  for (std::size_t s = 0; s < res.history.size(); ++s)
  {
    for (std::size_t j = 0; j < res.history[s].size(); ++j)
    {
      out << s << ',' << j + 1 << ',' << format_double(res.history[s][j].real()) << ','
          << format_double(res.history[s][j].imag()) << '\n';
    }
  }
}

inline std::vector<ResultRow> read_results(std::istream &in)
{
  std::vector<ResultRow> rows;
  std::string line;
  int number = 0;
  bool header = false;
  while (std::getline(in, line))
  {
    ++number;
    if (!line.empty() && line.back() == '\r')
    {
      line.pop_back();
    }
    if (line.empty())
    {
      continue;
    }
    if (!header)
    {
      if (line != kResultHeader)
      {
        detail::fail(number, 1, "expected result header '" + std::string(kResultHeader) + "'");
      }
      header = true;
      continue;
    }
    std::vector<detail::Token> fields;
    std::size_t start = 0;
    while (true)
    {
      const std::size_t comma = line.find(',', start);
      const std::size_t end = comma == std::string::npos ? line.size() : comma;
      fields.push_back({std::string_view(line).substr(start, end - start),
                        static_cast<int>(start) + 1});
      if (comma == std::string::npos)
      {
        break;
      }
      start = comma + 1;
    }
    if (fields.size() != 8)
    {
      detail::fail(number, 1, "expected 8 fields, found " + std::to_string(fields.size()));
    }
    auto number_or_nan = [&](const detail::Token &tok) {
      if (tok.text == "nan")
      {
        return std::numeric_limits<double>::quiet_NaN();
      }
      return detail::parse_number(tok, number);
    };
    ResultRow row;
    row.index = detail::parse_positive(fields[0], number, "index");
    row.lambda = {detail::parse_number(fields[1], number), detail::parse_number(fields[2], number)};
    row.y = {detail::parse_number(fields[3], number), detail::parse_number(fields[4], number)};
    row.eta_hat = number_or_nan(fields[5]);
    {
      int sweeps = 0;
      const auto &tok = fields[6];
      const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), sweeps);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || sweeps < 0)
      {
        detail::fail(number, tok.column, "bad sweep count");
      }
      row.sweeps = sweeps;
    }
    row.status = std::string(fields[7].text);
    rows.push_back(std::move(row));
  }
  if (!header)
  {
    detail::fail(number + 1, 1, "missing result header");
  }
  return rows;
}

}  // namespace tpal::io
