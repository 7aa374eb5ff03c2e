// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// 3-adic exponent bookkeeping for the localized ring and the congruence family.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "cforge/check_result.hpp"

namespace cforge::exponents {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// theta(m), m >= 1.
std::int64_t theta(std::int64_t m);
/// pi_0(m, r) = max(0, floor((3r - m)/4) - 1), m >= 1.
std::int64_t pi0(std::int64_t m, std::int64_t r);
/// pi_1(m, r), m >= 1, r >= 1.
std::int64_t pi1(std::int64_t m, std::int64_t r);
/// pi_i for parity i in {0, 1}.
std::int64_t pi(int i, std::int64_t m, std::int64_t r);
/// phi(l), l >= 0.
std::int64_t phi(std::int64_t l);
/// psi(alpha) = floor(3^{alpha+1} / 8), alpha >= 1.
std::int64_t psi(std::int64_t alpha);
/// beta(alpha) = 2 floor(alpha/2) + 1, alpha >= 1.
std::int64_t beta(std::int64_t alpha);
/// lambda_alpha: (1 + 5*3^alpha)/8 for odd alpha, (1 + 7*3^alpha)/8 for even alpha.
std::int64_t lambda(std::int64_t alpha);

/// Lowest admissible r: ceil((m + delta)/3) with delta = 1 - i.
std::int64_t r_min(int i, std::int64_t m);

/// Rows m = 1..6, columns r = 1..6; empty where r < r_min.
using ExponentTable = std::array<std::array<std::optional<std::int64_t>, 6>, 6>;

/// theta(m) + pi_0(m, r) - theta(r), computed.
ExponentTable theta_pi0_table();
/// theta(m) + pi_1(m, r) - theta(r) - 2, computed.
ExponentTable theta_pi1_table();
/// The same two tables as hard-coded reference values.
const ExponentTable& printed_theta_pi0_table();
const ExponentTable& printed_theta_pi1_table();

/// Verifies the pi/phi gap inequality (>= 2 for l > 0, = 1 for l = 0) over i in {0,1},
/// 1 <= m <= m_max, 1 <= r <= r_max, 0 <= l <= l_max with r - l >= 1; both
/// tables entry for entry; and every case split of the stability proofs over the grid.
CheckResult check_exponent_lemmas(std::int64_t m_max, std::int64_t r_max, std::int64_t l_max);

}  // namespace cforge::exponents
