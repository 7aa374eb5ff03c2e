// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cforge/rational.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {

/// The cusp a/c; infinity is stored as 1/0.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t c = 0;

  static Cusp infinity() { return {1, 0}; }
  bool is_infinity() const { return c == 0; }

  /// "inf" or "a/c".
  std::string to_string() const;
  /// Accepts "inf", "oo", "a/c" and "a/0"; reduces the fraction.
  static Cusp parse(const std::string& text);

  auto operator<=>(const Cusp&) const = default;
};

/// One representative per cusp of X_0(N), ordered by c ascending (infinity first), then a.
std::vector<Cusp> cusps_of(std::int64_t N);

/// Standard count sum_{c | N} phi(gcd(c, N/c)), kept as an independent cross-check.
std::int64_t cusp_count_formula(std::int64_t N);

/// True iff some y, j with gcd(y, N) = 1 give y*a2 = a1 + j*c1 and c2 = y*c1 (mod N).
bool cusp_equivalent(const Cusp& c1, const Cusp& c2, std::int64_t N);

/// Width N / gcd(c^2, N) of the cusp on X_0(N).
std::int64_t cusp_width(const Cusp& cusp, std::int64_t N);

struct NewmanBreakdown {
  bool weight_zero = false;
  bool sum_delta_r = false;      // sum delta*r_delta = 0 mod 24
  bool sum_cofactor_r = false;   // sum (N/delta)*r_delta = 0 mod 24
  bool square_product = false;   // prod delta^{|r_delta|} is a square
  bool modular() const { return weight_zero && sum_delta_r && sum_cofactor_r && square_product; }
};

/// Newman's criterion at eq.level, applied to the rescaled exponents.
NewmanBreakdown newman_is_modular(const EtaQuotient& eq);

/// Order of the eta quotient at the cusp of X_0(eq.level), by Ligozat's formula.
Rat ligozat_order(const EtaQuotient& eq, const Cusp& cusp);

/// Lower bound on the order at `cusp` of prod eta(lambda tau)^{s_lambda} * sum a(mn+t) q^n,
/// where sum a(n) q^n = prod (q^delta;q^delta)^{r_delta}. Minimises over l = 0..m-1.
Rat radu_lower_bound(const std::map<std::int64_t, std::int64_t>& gen, std::int64_t m, std::int64_t t,
                     const std::map<std::int64_t, std::int64_t>& prefactor, const Cusp& cusp, std::int64_t N);

struct CuspOrderTable {
  std::int64_t level = 1;
  std::vector<std::pair<Cusp, Rat>> rows;

  Rat at(const Cusp& cusp) const;
  /// Sum of orders over all rows; zero for a principal divisor.
  Rat degree() const;
};

/// Orders of eq at every cusp of X_0(level); eq is rescaled to `level` first.
CuspOrderTable order_table(const EtaQuotient& eq, std::int64_t level);

struct EtaFactor {
  EtaQuotient quotient;
  std::int64_t exponent = 1;
};

struct SinglePoleCertificate {
  CuspOrderTable table;
  bool single_pole = false;
};

/// Orders of prod quotient^exponent at every cusp of X_0(level), summed factorwise;
/// single_pole is true iff every cusp other than target has order >= 0.
/// Throws std::invalid_argument when a factor is not an eta quotient at `level`.
SinglePoleCertificate certify_single_pole(const std::vector<EtaFactor>& factors, const Cusp& target,
                                          std::int64_t level);

}  // namespace cforge
