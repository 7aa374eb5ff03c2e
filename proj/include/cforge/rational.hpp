// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cforge {

using Int = mpz_class;
using Rat = mpq_class;

/// Floor of a/b for b > 0 (C++ division truncates toward zero).
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

constexpr std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int pow_int(long base, unsigned long exponent) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exponent);
  if (base < 0 && (exponent & 1U)) r = -r;
  return r;
}

inline Int pow3(unsigned long exponent) { return pow_int(3, exponent); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// p-adic valuation of a nonzero integer; returns INT64_MAX for zero.
inline std::int64_t valuation(const Int& v, unsigned long p) {
  if (v == 0) return std::numeric_limits<std::int64_t>::max();
  Int t = v;
  std::int64_t count = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++count;
  }
  return count;
}

inline bool divisible(const Int& v, const Int& d) { return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0; }

/// Nonnegative residue of v modulo m (m > 0).
inline Int mod_floor(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& v) { return v.get_str(); }

/// Parses "p", "-p" or "p/q".
inline Rat parse_rational(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw std::invalid_argument("bad rational: " + text);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace cforge
