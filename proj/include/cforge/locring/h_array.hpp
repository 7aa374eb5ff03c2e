// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// The integer arrays h_i(m, n, r):
//   U^(i)(x^m/(1+9x)^n) = (1+9x)^{-(3n+kappa)} sum_{r >= r_min} h_i(m,n,r) 3^{pi_i(m,r)} x^r,
// with kappa = 1 for i = 0 and kappa = 0 for i = 1.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cforge/check_result.hpp"
#include "cforge/rational.hpp"

namespace cforge {

/// Raised when an instance does not have the predicted shape or divisibility.
class HExtractionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// h_i(m, n, r) for one (i, m, n) and r_min <= r <= r_min + h.size() - 1.
struct HSlice {
  int i = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t denom_pow = 0;
  std::int64_t r_min = 0;
  std::vector<Int> h;

  /// Zero above the stored range; throws std::out_of_range below r_min.
  Int at(std::int64_t r) const;
  std::int64_t r_max() const { return r_min + static_cast<std::int64_t>(h.size()) - 1; }
};

/// 3n + kappa.
std::int64_t h_denominator_power(int i, std::int64_t n);

/// Rewrites U^(i)(x^m/(1+9x)^n) over (1+9x)^{3n+kappa}, checks that coefficients below r_min
/// vanish and that each remaining coefficient is divisible by 3^{pi_i(m,r)}, and divides.
/// r_max < 0 means the full numerator degree. Needs m >= 1, n >= 0. Throws HExtractionError.
HSlice extract_h(int i, std::int64_t m, std::int64_t n, std::int64_t r_max = -1);

/// Lazily extracted slices for one parity. Not thread-safe.
class HArray {
 public:
  explicit HArray(int i) : i_(i) {}
  int parity() const { return i_; }
  const HSlice& slice(std::int64_t m, std::int64_t n);
  Int at(std::int64_t m, std::int64_t n, std::int64_t r) { return slice(m, n).at(r); }

 private:
  int i_;
  std::map<std::pair<std::int64_t, std::int64_t>, HSlice> slices_;
};

/// Expansion tables of the recurrence weights
///   w(j,k) = -a_j b_k (1+9x)^{3(k-1)} = sum_{l=1}^{12} v(j,k,l) 3^{floor((3l+j)/4)} x^l,
///   what(k) = b_k (1+9x)^{3(k-1)}     = sum_{l=0}^{6} vhat(k,l) 3^{phi(l)} x^l   (k < 3),
///   what(3) = (1+9x)^6                = 1 + sum_{l=1}^{6} vhat(3,l) 3^{phi(l)} x^l,
/// with b_k evaluated at z = 1 + 9x.
struct WExpansions {
  /// v[j][k-1][l] for l = 0..12; entry l = 0 is always zero.
  std::array<std::array<std::vector<Int>, 3>, 3> v;
  /// vhat[k-1][l] for l = 0..6; vhat[2][0] holds the bare constant 1.
  std::array<std::vector<Int>, 3> vhat;
  /// Integrality, degree and constant-term checks behind the tables.
  CheckResult checks;
};

WExpansions w_expansions();

/// Shape check: extract_h succeeds for both parities, 1 <= m <= m_max, 1 <= n <= n_max.
CheckResult check_h_shape(std::int64_t m_max, std::int64_t n_max);

/// The h congruences, each over its stated domain with the family index n <= n_max:
///   h_i(m,n,r) = h_i(m,n-3,r) (mod 3) for 4 <= n <= n_max, 1 <= m <= m_max;
///   h_1(m,1,2) = h_0(m,3,4) = 0 (mod 3) for m <= 3 and h_1(m,1,4) = 0 (mod 3) for m <= 6;
///   h_i(m,n,r) = 3(h_i(m,n-1,r) - h_i(m,n-2,r)) + h_i(m,n-3,r) (mod 9) for 4 <= n <= n_max;
///   h_1(m,1,r) = h_1(m,2,r) = h_1(m,3,r) (mod 3) and h_1(m,3n+1,r) = h_1(m,1,r) (mod 9)
///     for 1 <= r <= 5, 1 <= m <= 3r;
///   h_0(m,1,w) = h_0(m,2,w) = h_0(m,3,w) (mod 3) and h_0(m,3n,w) = h_0(m,3,w) (mod 9)
///     for 1 <= w <= 3, 1 <= m <= 3w - 1;
///   h_1(m,3n+1,1) = 0 (mod 9) for 1 <= m <= 3, 0 <= n <= n_max.
/// r runs up to r_max (negative: the full degree of each slice).
/// If residue_one_out is given it receives h_1(m,3n+1,1) = 1 (mod 9) over the same domain,
/// the form the U^(1) stability argument consumes.
CheckResult check_h_congruences(std::int64_t n_max, std::int64_t r_max, std::int64_t m_max = 9,
                                CheckResult* residue_one_out = nullptr);

}  // namespace cforge
