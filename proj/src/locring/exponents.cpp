// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/exponents.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "cforge/rational.hpp"

namespace cforge::exponents {
namespace {

void require(bool ok, const char* what, std::int64_t v) {
  if (!ok) throw DomainError(std::string(what) + " out of domain: " + std::to_string(v));
}

std::int64_t pow3_i64(std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= 3;
  return r;
}

}  // namespace

std::int64_t theta(std::int64_t m) {
  require(m >= 1, "theta: m", m);
  if (m <= 3) return 0;
  if (m <= 6) return 2;
  return floor_div(3 * m - 3, 4) - 1;
}

std::int64_t pi0(std::int64_t m, std::int64_t r) {
  require(m >= 1, "pi0: m", m);
  return std::max<std::int64_t>(0, floor_div(3 * r - m, 4) - 1);
}

std::int64_t pi1(std::int64_t m, std::int64_t r) {
  require(m >= 1, "pi1: m", m);
  if (m <= 3) {
    require(r >= 1, "pi1: r", r);
    return r == 1 ? 0 : floor_div(3 * r + 1, 4);
  }
  return floor_div(3 * r - m + 1, 4);
}

std::int64_t pi(int i, std::int64_t m, std::int64_t r) {
  require(i == 0 || i == 1, "pi: parity", i);
  return i == 0 ? pi0(m, r) : pi1(m, r);
}

std::int64_t phi(std::int64_t l) {
  require(l >= 0, "phi: l", l);
  return l == 0 ? 1 : floor_div(3 * l + 12, 4);
}

std::int64_t psi(std::int64_t alpha) {
  require(alpha >= 1 && alpha <= 38, "psi: alpha", alpha);
  return pow3_i64(alpha + 1) / 8;
}

std::int64_t beta(std::int64_t alpha) {
  require(alpha >= 1, "beta: alpha", alpha);
  return 2 * (alpha / 2) + 1;
}

std::int64_t lambda(std::int64_t alpha) {
  require(alpha >= 1 && alpha <= 37, "lambda: alpha", alpha);
  const std::int64_t p = pow3_i64(alpha);
  return alpha % 2 == 1 ? (1 + 5 * p) / 8 : (1 + 7 * p) / 8;
}

std::int64_t r_min(int i, std::int64_t m) { return ceil_div(m + (i == 0 ? 1 : 0), 3); }

namespace {

std::int64_t gap0(std::int64_t m, std::int64_t r) { return theta(m) + pi0(m, r) - theta(r); }
std::int64_t gap1(std::int64_t m, std::int64_t r) { return theta(m) + pi1(m, r) - theta(r) - 2; }

template <class F>
ExponentTable build_table(int i, F f) {
  ExponentTable t;
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t r = 1; r <= 6; ++r)
      if (r >= r_min(i, m)) t[m - 1][r - 1] = f(m, r);
  return t;
}

ExponentTable from_rows(const std::array<std::array<int, 6>, 6>& rows) {
  constexpr int kBlank = 99;
  ExponentTable t;
  for (std::size_t m = 0; m < 6; ++m)
    for (std::size_t r = 0; r < 6; ++r)
      if (rows[m][r] != kBlank) t[m][r] = rows[m][r];
  return t;
}

Counterexample cx(std::string check, std::initializer_list<std::pair<const char*, std::int64_t>> fields) {
  Counterexample out{{"check", std::move(check)}};
  for (const auto& [k, v] : fields) out.emplace_back(k, std::to_string(v));
  return out;
}

}  // namespace

ExponentTable theta_pi0_table() { return build_table(0, gap0); }
ExponentTable theta_pi1_table() { return build_table(1, gap1); }

const ExponentTable& printed_theta_pi0_table() {
  static const ExponentTable t = from_rows({{{0, 0, 1, -1, 0, 1},
                                             {0, 0, 0, -1, 0, 1},
                                             {99, 0, 0, -1, 0, 0},
                                             {99, 2, 2, 1, 1, 2},
                                             {99, 2, 2, 0, 1, 2},
                                             {99, 99, 2, 0, 1, 2}}});
  return t;
}

const ExponentTable& printed_theta_pi1_table() {
  static const ExponentTable t = from_rows({{{-2, -1, 0, -1, 0, 0},
                                             {-2, -1, 0, -1, 0, 0},
                                             {-2, -1, 0, -1, 0, 0},
                                             {99, 0, 1, 0, 1, 1},
                                             {99, 0, 1, 0, 0, 1},
                                             {99, 0, 1, -1, 0, 1}}});
  return t;
}

CheckResult check_exponent_lemmas(std::int64_t m_max, std::int64_t r_max, std::int64_t l_max) {
  CheckResult out;
  for (int i = 0; i <= 1; ++i)
    for (std::int64_t m = 1; m <= m_max; ++m)
      for (std::int64_t r = 1; r <= r_max; ++r)
        for (std::int64_t l = 0; l <= l_max && r - l >= 1; ++l) {
          const std::int64_t g = pi(i, m, r - l) + phi(l) - pi(i, m, r);
          out.check(l == 0 ? g == 1 : g >= 2, cx("pi-phi gap", {{"i", i}, {"m", m}, {"r", r}, {"l", l}, {"value", g}}));
        }

  const std::array<std::pair<ExponentTable, const ExponentTable*>, 2> tables{
      {{theta_pi0_table(), &printed_theta_pi0_table()}, {theta_pi1_table(), &printed_theta_pi1_table()}}};
  for (int i = 0; i <= 1; ++i) {
    const auto& [computed, printed] = tables[static_cast<std::size_t>(i)];
    for (std::int64_t m = 1; m <= 6; ++m)
      for (std::int64_t r = 1; r <= 6; ++r) {
        const auto& c = computed[m - 1][r - 1];
        const auto& p = (*printed)[m - 1][r - 1];
        out.check(c == p, cx(i == 0 ? "table theta+pi0" : "table theta+pi1-2",
                             {{"m", m}, {"r", r}, {"computed", c.value_or(99)}, {"printed", p.value_or(99)}}));
      }
  }

  // Exceptions inside the 6x6 blocks are exactly the compensated cells.
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t r = r_min(0, m); r <= 6; ++r) {
      const bool expected_negative = m <= 3 && r == 4;
      out.check((gap0(m, r) < 0) == expected_negative, cx("U0 exception set", {{"m", m}, {"r", r}, {"value", gap0(m, r)}}));
    }
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t r = r_min(1, m); r <= 6; ++r) {
      const bool expected_negative = (m <= 3 && (r == 1 || r == 2 || r == 4)) || (m == 6 && r == 4);
      out.check((gap1(m, r) < 0) == expected_negative, cx("U1 exception set", {{"m", m}, {"r", r}, {"value", gap1(m, r)}}));
      if (m <= 3 && r == 1) out.check(gap1(m, r) == -2, cx("U1 r=1 deficit", {{"m", m}, {"value", gap1(m, r)}}));
    }

  // Region-by-region bounds outside the 6x6 blocks.
  for (std::int64_t m = 1; m <= m_max; ++m)
    for (std::int64_t r = 1; r <= r_max; ++r) {
      if (r >= r_min(0, m) && (r >= 7 || m >= 7))
        out.check(gap0(m, r) >= 0, cx("U0 region", {{"m", m}, {"r", r}, {"value", gap0(m, r)}}));
      if (r >= r_min(1, m) && (r >= 7 || m >= 7))
        out.check(gap1(m, r) >= 0, cx("U1 region", {{"m", m}, {"r", r}, {"value", gap1(m, r)}}));
    }

  // Terms with r >= 5 vanish mod 9 in the composite coefficients.
  for (std::int64_t r = 5; r <= r_max; ++r)
    for (std::int64_t m = 1; m <= 3 * r && m <= m_max; ++m)
      for (std::int64_t w = 1; w <= 3; ++w) {
        const std::int64_t e = theta(m) + pi1(m, r) + pi0(r, w);
        out.check(e >= 4, cx("composite r>=5", {{"m", m}, {"r", r}, {"w", w}, {"value", e}}));
      }
  return out;
}

}  // namespace cforge::exponents
