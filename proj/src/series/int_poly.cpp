// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/series/int_poly.hpp"

#include <algorithm>

namespace cforge {
namespace {

void accumulate_schoolbook(std::span<const Int> a, std::span<const Int> b, Int* out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
  }
}

void add_into(std::span<const Int> src, Int* dst) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
}

// out += a*b; out has room for |a|+|b|-1 entries.
void accumulate_product(std::span<const Int> a, std::span<const Int> b, Int* out) {
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() < kKaratsubaThreshold) {
    accumulate_schoolbook(a, b, out);
    return;
  }
  if (a.size() >= 2 * b.size()) {
    // Unbalanced: slice the long operand into |b|-sized blocks.
    for (std::size_t start = 0; start < a.size(); start += b.size()) {
      const std::size_t len = std::min(b.size(), a.size() - start);
      accumulate_product(a.subspan(start, len), b, out + start);
    }
    return;
  }
  const std::size_t half = a.size() / 2;
  const auto a0 = a.first(half);
  const auto a1 = a.subspan(half);
  const auto b0 = b.first(std::min(half, b.size()));
  const auto b1 = b.subspan(b0.size());

  IntVec low(a0.size() + b0.size() - 1);
  accumulate_product(a0, b0, low.data());
  IntVec high;
  if (!b1.empty()) {
    high.resize(a1.size() + b1.size() - 1);
    accumulate_product(a1, b1, high.data());
  }

  IntVec sa(std::max(a0.size(), a1.size()));
  add_into(a0, sa.data());
  add_into(a1, sa.data());
  IntVec sb(std::max(b0.size(), b1.size()));
  add_into(b0, sb.data());
  add_into(b1, sb.data());
  IntVec mid(sa.size() + sb.size() - 1);
  accumulate_product(sa, sb, mid.data());
  for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

  add_into(low, out);
  add_into(mid, out + half);
  add_into(high, out + 2 * half);
}

}  // namespace

IntVec multiply(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  IntVec out(a.size() + b.size() - 1);
  accumulate_product(a, b, out.data());
  return out;
}

IntVec multiply_truncated(std::span<const Int> a, std::span<const Int> b, std::size_t n) {
  a = a.first(std::min(a.size(), n));
  b = b.first(std::min(b.size(), n));
  IntVec out = multiply(a, b);
  out.resize(n);
  return out;
}

IntVec multiply_schoolbook(std::span<const Int> a, std::span<const Int> b) {
  if (a.empty() || b.empty()) return {};
  IntVec out(a.size() + b.size() - 1);
  accumulate_schoolbook(a, b, out.data());
  return out;
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (const Int& c : v) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(IntVec& v, const Int& d) {
  if (d == 1) return;
  for (Int& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

}  // namespace cforge
