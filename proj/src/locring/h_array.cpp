// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/h_array.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "cforge/locring/exponents.hpp"
#include "cforge/locring/localized.hpp"
#include "cforge/locring/modular_equations.hpp"
#include "cforge/locring/u_operator.hpp"

namespace cforge {
namespace {

std::string label(int i, std::int64_t m, std::int64_t n) {
  return "(i=" + std::to_string(i) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
}

Counterexample cx(const std::string& check, std::initializer_list<std::pair<const char*, std::int64_t>> fields,
                  std::initializer_list<std::pair<const char*, Int>> values = {}) {
  Counterexample out{{"check", check}};
  for (const auto& [k, v] : fields) out.emplace_back(k, std::to_string(v));
  for (const auto& [k, v] : values) out.emplace_back(k, v.get_str());
  return out;
}

bool congruent(const Int& a, const Int& b, long mod) { return mod_floor(a - b, Int(mod)) == 0; }

}  // namespace

Int HSlice::at(std::int64_t r) const {
  if (r < r_min) throw std::out_of_range("h index r below r_min");
  if (r > r_max()) return Int(0);
  return h[static_cast<std::size_t>(r - r_min)];
}

std::int64_t h_denominator_power(int i, std::int64_t n) { return 3 * n + (i == 0 ? 1 : 0); }

HSlice extract_h(int i, std::int64_t m, std::int64_t n, std::int64_t r_max) {
  if (m < 1 || n < 0) throw std::invalid_argument("extract_h needs m >= 1, n >= 0");
  HSlice out;
  out.i = i;
  out.m = m;
  out.n = n;
  out.denom_pow = h_denominator_power(i, n);
  out.r_min = exponents::r_min(i, m);
  LocalizedElement e;
  try {
    e = apply_u_monomial(i, m, n).with_denom_pow(out.denom_pow);
  } catch (const std::domain_error&) {
    throw HExtractionError("denominator power exceeds " + std::to_string(out.denom_pow) + " at " + label(i, m, n));
  }
  const QPoly& num = e.numerator();
  if (!num.is_integral()) throw HExtractionError("non-integral numerator at " + label(i, m, n));
  if (num.is_zero()) return out;
  if (num.low() < out.r_min)
    throw HExtractionError("nonzero coefficient of x^" + std::to_string(num.low()) + " below r_min at " + label(i, m, n));
  std::int64_t top = num.degree();
  if (r_max >= 0) top = std::min(top, r_max);
  for (std::int64_t r = out.r_min; r <= top; ++r) {
    const Int c = num.coeff(r).get_num();
    const std::int64_t p = exponents::pi(i, m, r);
    if (p >= 0) {
      const Int q = pow3(static_cast<unsigned long>(p));
      if (!divisible(c, q))
        throw HExtractionError("coefficient of x^" + std::to_string(r) + " not divisible by 3^" + std::to_string(p) +
                               " at " + label(i, m, n));
      out.h.push_back(c / q);
    } else {
      out.h.push_back(c * pow3(static_cast<unsigned long>(-p)));
    }
  }
  return out;
}

const HSlice& HArray::slice(std::int64_t m, std::int64_t n) {
  const auto key = std::make_pair(m, n);
  auto it = slices_.find(key);
  if (it == slices_.end()) it = slices_.emplace(key, extract_h(i_, m, n)).first;
  return it->second;
}

WExpansions w_expansions() {
  WExpansions out;
  for (int j = 0; j < 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      const QPoly w = -(modeq::a(j) * modeq::b_in_x(k) * one_plus_9x_pow(3 * (k - 1)));
      auto& row = out.v[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)];
      row.assign(13, Int(0));
      out.checks.check(w.is_integral() && (w.is_zero() || (w.low() >= 1 && w.degree() <= 12)),
                       cx("w support", {{"j", j}, {"k", k}}));
      for (std::int64_t l = 1; l <= 12; ++l) {
        const Int c = w.coeff(l).get_num();
        const Int q = pow3(static_cast<unsigned long>(floor_div(3 * l + j, 4)));
        const bool ok = divisible(c, q);
        out.checks.check(ok, cx("w divisibility", {{"j", j}, {"k", k}, {"l", l}}, {{"coefficient", c}}));
        if (ok) row[static_cast<std::size_t>(l)] = c / q;
      }
    }
  for (int k = 1; k <= 3; ++k) {
    const QPoly w = modeq::b_in_x(k) * one_plus_9x_pow(3 * (k - 1));
    auto& row = out.vhat[static_cast<std::size_t>(k - 1)];
    row.assign(7, Int(0));
    out.checks.check(w.is_integral() && w.low() >= 0 && w.degree() <= 6, cx("what support", {{"k", k}}));
    for (std::int64_t l = 0; l <= 6; ++l) {
      const Int c = w.coeff(l).get_num();
      if (k == 3 && l == 0) {
        out.checks.check(c == 1, cx("what(3) constant", {}, {{"coefficient", c}}));
        row[0] = c;
        continue;
      }
      const Int q = pow3(static_cast<unsigned long>(exponents::phi(l)));
      const bool ok = divisible(c, q);
      out.checks.check(ok, cx("what divisibility", {{"k", k}, {"l", l}}, {{"coefficient", c}}));
      if (ok) row[static_cast<std::size_t>(l)] = c / q;
    }
  }
  return out;
}

CheckResult check_h_shape(std::int64_t m_max, std::int64_t n_max) {
  CheckResult out;
  for (int i = 0; i <= 1; ++i)
    for (std::int64_t m = 1; m <= m_max; ++m)
      for (std::int64_t n = 1; n <= n_max; ++n) {
        try {
          const HSlice s = extract_h(i, m, n);
          out.check(true, {});
        } catch (const HExtractionError& e) {
          Counterexample c = cx("shape", {{"i", i}, {"m", m}, {"n", n}});
          c.emplace_back("reason", e.what());
          out.check(false, c);
        }
      }
  return out;
}

CheckResult check_h_congruences(std::int64_t n_max, std::int64_t r_max, std::int64_t m_max,
                                CheckResult* residue_one_out) {
  CheckResult out;
  CheckResult residue_one;
  std::array<HArray, 2> h{HArray(0), HArray(1)};
  auto top = [&](const HSlice& a, const HSlice& b) {
    const std::int64_t t = std::max(a.r_max(), b.r_max());
    return r_max >= 0 ? std::min(t, r_max) : t;
  };
  auto guarded = [&](const std::string& check, std::initializer_list<std::pair<const char*, std::int64_t>> where,
                     auto&& body) {
    try {
      body();
    } catch (const HExtractionError& e) {
      Counterexample c = cx(check, where);
      c.emplace_back("reason", e.what());
      out.fail(c);
    }
  };

  for (int i = 0; i <= 1; ++i)
    for (std::int64_t m = 1; m <= m_max; ++m)
      for (std::int64_t n = 4; n <= n_max; ++n)
        guarded("h mod 3 period", {{"i", i}, {"m", m}, {"n", n}}, [&] {
          auto& H = h[static_cast<std::size_t>(i)];
          const HSlice& s0 = H.slice(m, n);
          const HSlice& s1 = H.slice(m, n - 1);
          const HSlice& s2 = H.slice(m, n - 2);
          const HSlice& s3 = H.slice(m, n - 3);
          const std::int64_t t = std::max({top(s0, s3), top(s1, s2)});
          for (std::int64_t r = s0.r_min; r <= t; ++r) {
            const Int a = s0.at(r);
            const Int b = s3.at(r);
            out.check(congruent(a, b, 3), cx("h mod 3 period", {{"i", i}, {"m", m}, {"n", n}, {"r", r}}, {{"h", a}, {"h(n-3)", b}}));
            const Int rec = 3 * (s1.at(r) - s2.at(r)) + b;
            out.check(congruent(a, rec, 9), cx("h mod 9 recurrence", {{"i", i}, {"m", m}, {"n", n}, {"r", r}}, {{"h", a}, {"recurrence", rec}}));
          }
        });

  guarded("h special zeros", {}, [&] {
    for (std::int64_t m = 1; m <= 3; ++m) {
      const Int a = h[1].at(m, 1, 2);
      out.check(congruent(a, 0, 3), cx("h_1(m,1,2) mod 3", {{"m", m}}, {{"h", a}}));
      const Int b = h[0].at(m, 3, 4);
      out.check(congruent(b, 0, 3), cx("h_0(m,3,4) mod 3", {{"m", m}}, {{"h", b}}));
    }
    for (std::int64_t m = 1; m <= 6; ++m) {
      const Int a = h[1].at(m, 1, 4);
      out.check(congruent(a, 0, 3), cx("h_1(m,1,4) mod 3", {{"m", m}}, {{"h", a}}));
    }
  });

  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t m = 1; m <= 3 * r; ++m)
      guarded("h_1 mod 9 lift", {{"m", m}, {"r", r}}, [&] {
        const Int base = h[1].at(m, 1, r);
        out.check(congruent(base, h[1].at(m, 2, r), 3) && congruent(base, h[1].at(m, 3, r), 3),
                  cx("h_1(m,1..3,r) mod 3", {{"m", m}, {"r", r}}, {{"h", base}}));
        for (std::int64_t n = 1; n <= n_max; ++n) {
          const Int a = h[1].at(m, 3 * n + 1, r);
          out.check(congruent(a, base, 9), cx("h_1(m,3n+1,r) mod 9", {{"m", m}, {"n", n}, {"r", r}}, {{"h", a}, {"h(m,1,r)", base}}));
        }
      });

  for (std::int64_t w = 1; w <= 3; ++w)
    for (std::int64_t m = 1; m <= 3 * w - 1; ++m)
      guarded("h_0 mod 9 lift", {{"m", m}, {"w", w}}, [&] {
        const Int base = h[0].at(m, 3, w);
        out.check(congruent(base, h[0].at(m, 1, w), 3) && congruent(base, h[0].at(m, 2, w), 3),
                  cx("h_0(m,1..3,w) mod 3", {{"m", m}, {"w", w}}, {{"h", base}}));
        for (std::int64_t n = 1; n <= n_max; ++n) {
          const Int a = h[0].at(m, 3 * n, w);
          out.check(congruent(a, base, 9), cx("h_0(m,3n,w) mod 9", {{"m", m}, {"n", n}, {"w", w}}, {{"h", a}, {"h(m,3,w)", base}}));
        }
      });

  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 0; n <= n_max; ++n)
      guarded("h_1(m,3n+1,1) mod 9", {{"m", m}, {"n", n}}, [&] {
        const Int a = h[1].at(m, 3 * n + 1, 1);
        out.check(congruent(a, 0, 9), cx("h_1(m,3n+1,1) = 0 mod 9", {{"m", m}, {"n", n}}, {{"h", a}}));
        residue_one.check(congruent(a, 1, 9), cx("h_1(m,3n+1,1) = 1 mod 9", {{"m", m}, {"n", n}}, {{"h", a}}));
      });
  if (residue_one_out != nullptr) *residue_one_out = residue_one;
  return out;
}

}  // namespace cforge
