// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/v_sets.hpp"

#include <initializer_list>
#include <stdexcept>

#include "cforge/locring/exponents.hpp"
#include "cforge/locring/h_array.hpp"

namespace cforge {
namespace {

constexpr std::size_t kThatLength = 15;

Counterexample cx(const std::string& check, const std::string& term, const Rat& computed, const Rat& printed) {
  return {{"check", check}, {"term", term}, {"computed", computed.get_str()}, {"printed", printed.get_str()}};
}

std::vector<Rat> parse_row(std::initializer_list<const char*> values) {
  std::vector<Rat> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

}  // namespace

LocalizedElement VDecomposition::reconstruct() const {
  if (s.empty()) return LocalizedElement(QPoly(), n);
  const std::int64_t top = s.rbegin()->first;
  std::vector<Int> coeffs(static_cast<std::size_t>(top + 1));
  for (const auto& [m, v] : s) coeffs[static_cast<std::size_t>(m)] = v * pow3(static_cast<unsigned long>(exponents::theta(m)));
  return LocalizedElement(QPoly::from_integers(std::move(coeffs), 0), n);
}

VMembership v_membership(const LocalizedElement& f, int i, std::int64_t n) {
  if (i != 0 && i != 1) throw std::invalid_argument("parity must be 0 or 1");
  VMembership out;
  LocalizedElement g;
  try {
    g = f.with_denom_pow(n);
  } catch (const std::domain_error&) {
    out.diagnosis = "denominator power " + std::to_string(f.normalized().denom_pow()) + " exceeds " + std::to_string(n);
    return out;
  }
  const QPoly& num = g.numerator();
  VDecomposition d{i, n, {}};
  if (!num.is_zero()) {
    if (!num.is_integral()) {
      out.diagnosis = "numerator is not integral";
      return out;
    }
    if (num.low() < 1) {
      out.diagnosis = "nonzero constant term";
      return out;
    }
    for (std::int64_t m = num.low(); m <= num.degree(); ++m) {
      const Int c = num.coeff(m).get_num();
      if (c == 0) continue;
      const std::int64_t t = exponents::theta(m);
      const Int q = pow3(static_cast<unsigned long>(t));
      if (!divisible(c, q)) {
        out.diagnosis = "coefficient of x^" + std::to_string(m) + " not divisible by 3^" + std::to_string(t);
        return out;
      }
      d.s.emplace(m, c / q);
    }
  }
  if (i == 1) {
    Int sum = 0;
    for (std::int64_t m = 1; m <= 3; ++m)
      if (auto it = d.s.find(m); it != d.s.end()) sum += it->second;
    if (mod_floor(sum, Int(9)) != 0) {
      out.diagnosis = "s(1)+s(2)+s(3) = " + sum.get_str() + " is not 0 mod 9";
      return out;
    }
  }
  out.decomposition = std::move(d);
  return out;
}

VDecomposition random_v_element(int i, std::int64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-50, 50);
  VDecomposition d{i, n, {}};
  std::array<long, 13> s{};
  for (std::size_t m = 1; m <= 12; ++m) s[m] = dist(rng);
  if (i == 1) {
    const long r = ((s[1] + s[2] + s[3]) % 9 + 9) % 9;
    s[3] -= r;
  }
  for (std::int64_t m = 1; m <= 12; ++m)
    if (s[static_cast<std::size_t>(m)] != 0) d.s.emplace(m, Int(s[static_cast<std::size_t>(m)]));
  return d;
}

ThatForms that_vectors() {
  HArray h1(1);
  HArray h0(0);
  ThatForms out;
  for (auto& v : out.that) v.assign(kThatLength, Rat(0));
  out.sum.assign(kThatLength, Rat(0));
  for (std::int64_t w = 1; w <= 3; ++w) {
    const std::int64_t r_top = w == 1 ? 2 : 5;
    auto& form = out.that[static_cast<std::size_t>(w - 1)];
    for (std::int64_t r = 1; r <= r_top; ++r) {
      if (w < exponents::r_min(0, r)) continue;
      const Int outer = h0.at(r, 3, w);
      for (std::int64_t m = 1; m <= 3 * r; ++m) {
        const std::int64_t e = exponents::theta(m) + exponents::pi1(m, r) + exponents::pi0(r, w) - 2;
        Rat term(h1.at(m, 1, r) * outer);
        if (e >= 0) term *= Rat(pow3(static_cast<unsigned long>(e)));
        else term /= Rat(pow3(static_cast<unsigned long>(-e)));
        form[static_cast<std::size_t>(m - 1)] += term;
      }
    }
  }
  for (std::size_t m = 0; m < kThatLength; ++m)
    for (const auto& form : out.that) out.sum[m] += form[m];
  return out;
}

const ThatForms& printed_that_forms() {
  static const ThatForms forms = [] {
    ThatForms f;
    f.that[0] = parse_row({"-2/3", "22/3", "49/3", "82", "16", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"});
    f.that[1] = parse_row({"625/3", "36784/3", "1201024/3", "24003457", "60815254", "77522425", "172725210",
                           "243795825", "228765303", "48752847", "21348036", "6305121", "1201392", "44469", "2187"});
    f.that[2] = parse_row({"51181/3", "8480416/3", "315495472/3", "24003457", "60815254", "77522425", "172725210",
                           "243795825", "228765303", "48752847", "21348036", "6305121", "1201392", "44469", "2187"});
    f.sum = parse_row({"17268", "2839074", "105565515", "6356507958", "16011491148", "20309056443", "45101492226",
                       "63531577746", "59545450458", "12681870624", "5551428312", "1639392696", "312361920",
                       "11561940", "568620"});
    return f;
  }();
  return forms;
}

CheckResult check_that_forms(const ThatForms& computed) {
  const ThatForms& printed = printed_that_forms();
  CheckResult out;
  // that(1) stops at s(6); its later entries are compared against zero.
  for (std::size_t w = 0; w < 3; ++w)
    for (std::size_t m = 0; m < kThatLength; ++m) {
      const std::string term = "that(" + std::to_string(w + 1) + ") s(" + std::to_string(m + 1) + ")";
      out.check(computed.that[w][m] == printed.that[w][m], cx("printed coefficient", term, computed.that[w][m], printed.that[w][m]));
    }
  for (std::size_t m = 0; m < kThatLength; ++m)
    out.check(computed.sum[m] == printed.sum[m],
              cx("printed sum", "sum s(" + std::to_string(m + 1) + ")", computed.sum[m], printed.sum[m]));

  // Integral on the lattice generated by 9 e_1, e_2 - e_1, e_3 - e_1 and e_m (m >= 4).
  for (std::size_t w = 0; w < 3; ++w) {
    const auto& c = computed.that[w];
    const std::string name = "that(" + std::to_string(w + 1) + ")";
    out.check(is_integer(c[0] * 9), cx("integral on lattice", name + " 9 s(1)", c[0] * 9, Rat(0)));
    out.check(is_integer(c[1] - c[0]), cx("integral on lattice", name + " s(2)-s(1)", c[1] - c[0], Rat(0)));
    out.check(is_integer(c[2] - c[0]), cx("integral on lattice", name + " s(3)-s(1)", c[2] - c[0], Rat(0)));
    for (std::size_t m = 3; m < kThatLength; ++m)
      out.check(is_integer(c[m]), cx("integral on lattice", name + " s(" + std::to_string(m + 1) + ")", c[m], Rat(0)));
  }

  for (std::size_t m = 0; m < kThatLength; ++m) {
    const Rat& c = computed.sum[m];
    const Int want = m < 3 ? Int(6) : Int(0);
    const bool ok = is_integer(c) && mod_floor(c.get_num() - want, Int(9)) == 0;
    out.check(ok, cx("sum mod 9", "s(" + std::to_string(m + 1) + ")", c, Rat(want)));
  }
  return out;
}

}  // namespace cforge
