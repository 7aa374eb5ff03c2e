// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/u_operator.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cforge/locring/modular_equations.hpp"

namespace cforge {
namespace {

void check_parity(int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("parity must be 0 or 1");
}

const std::array<QPoly, 3>& a_polys() {
  static const std::array<QPoly, 3> a{modeq::a(0), modeq::a(1), modeq::a(2)};
  return a;
}

// b_k(1+9x), indexed by k = 0..3.
const std::array<QPoly, 4>& b_x_polys() {
  static const std::array<QPoly, 4> b{modeq::b_in_x(0), modeq::b_in_x(1), modeq::b_in_x(2), modeq::b_in_x(3)};
  return b;
}

LocalizedElement over_z3(const LocalizedElement& e) { return {e.numerator(), e.denom_pow() + 3}; }

struct MonomialCache {
  std::mutex mu;
  std::map<std::tuple<int, std::int64_t, std::int64_t>, LocalizedElement> values;
};

MonomialCache& monomial_cache() {
  static MonomialCache cache;
  return cache;
}

// U^(i)(z^r) on the x side: negative r from the m = 0 column, r >= 0 by the binomial theorem.
LocalizedElement u_of_z_power_x_side(int i, std::int64_t r) {
  if (r <= 0) return apply_u_monomial(i, 0, -r);
  LocalizedElement acc;
  for (std::int64_t k = 0; k <= r; ++k)
    acc += apply_u_monomial(i, k, 0).scaled(
        Rat(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)) * pow_int(9, static_cast<unsigned long>(k))));
  return acc;
}

// U^(i)(x^m / z^n) = 9^{-m} sum_r (-1)^{m-r} C(m, r) U^(i)(z^{r-n}).
LocalizedElement initial_relation(int i, std::int64_t m, std::int64_t n) {
  LocalizedElement acc;
  for (std::int64_t r = 0; r <= m; ++r) {
    Int c = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(r));
    if ((m - r) % 2 == 1) c = -c;
    acc += u_of_z_power_x_side(i, r - n).scaled(Rat(c));
  }
  acc = acc.scaled(Rat(Int(1), pow_int(9, static_cast<unsigned long>(m))));
  if (!acc.is_integral())
    throw std::logic_error("initial relation (" + std::to_string(i) + "," + std::to_string(m) + "," +
                           std::to_string(n) + ") is not integral after dividing by 9^m");
  return acc;
}

LocalizedElement compute_monomial(int i, std::int64_t m, std::int64_t n) {
  const auto& a = a_polys();
  const auto& b = b_x_polys();
  if (n == 0 && m <= 2) return fundamental_relation(i, static_cast<int>(m));
  if (n == 0) {
    // x^3 = -sum_j a_j(X) x^j.
    LocalizedElement acc;
    for (int j = 0; j < 3; ++j) acc += apply_u_monomial(i, m - 3 + j, 0).times(a[j]);
    return -acc;
  }
  if (m == 0) {
    // z^{-n} = Z^{-3} sum_{k=1}^{3} b_k(Z) z^{k-n}.
    LocalizedElement acc;
    for (int k = 1; k <= 3; ++k) acc += u_of_z_power_x_side(i, k - n).times(b[k]);
    return over_z3(acc);
  }
  if (m <= 3 && n <= 3) return initial_relation(i, m, n);
  if (n <= 2) {
    LocalizedElement acc;
    for (int j = 0; j < 3; ++j) acc += apply_u_monomial(i, m - 3 + j, n).times(a[j]);
    return -acc;
  }
  if (m <= 2) {
    LocalizedElement acc;
    for (int k = 1; k <= 3; ++k) acc += apply_u_monomial(i, m, n - k).times(b[k]);
    return over_z3(acc);
  }
  LocalizedElement acc;
  for (int j = 0; j < 3; ++j)
    for (int k = 1; k <= 3; ++k) acc += apply_u_monomial(i, m + j - 3, n - k).times(a[j] * b[k]);
  return -over_z3(acc);
}

struct ZPowerCache {
  std::mutex mu;
  // values[i] holds U^(i)(z^r) for r in [low, low + size).
  std::array<std::int64_t, 2> low{0, 0};
  std::array<std::vector<QPoly>, 2> values;
};

ZPowerCache& z_cache() {
  static ZPowerCache cache;
  return cache;
}

}  // namespace

std::map<std::pair<std::int64_t, std::int64_t>, LocalizedElement> base_relations(int i) {
  check_parity(i);
  std::map<std::pair<std::int64_t, std::int64_t>, LocalizedElement> out;
  for (std::int64_t l = 0; l <= 2; ++l) out.emplace(std::make_pair(l, std::int64_t{0}), fundamental_relation(i, static_cast<int>(l)));
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 3; ++n) out.emplace(std::make_pair(m, n), apply_u_monomial(i, m, n));
  return out;
}

LocalizedElement apply_u_monomial(int i, std::int64_t m, std::int64_t n) {
  check_parity(i);
  if (m < 0 || n < 0) throw std::invalid_argument("apply_u_monomial needs m, n >= 0");
  MonomialCache& cache = monomial_cache();
  const auto key = std::make_tuple(i, m, n);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same value.
  LocalizedElement value = compute_monomial(i, m, n);
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.values.emplace(key, std::move(value)).first->second;
}

QPoly apply_u_z_power(int i, std::int64_t r) {
  check_parity(i);
  ZPowerCache& cache = z_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& vals = cache.values[static_cast<std::size_t>(i)];
  std::int64_t& low = cache.low[static_cast<std::size_t>(i)];
  if (vals.empty()) {
    for (int k = 0; k <= 2; ++k) {
      LocalizedElement e;
      for (int j = 0; j <= k; ++j)
        e += fundamental_relation(i, j).scaled(
            Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) * pow_int(9, static_cast<unsigned long>(j))));
      vals.push_back(e.to_z_laurent());
    }
    low = 0;
  }
  const QPoly z3 = QPoly::monomial(Rat(1), -3);
  while (r < low) {
    // U(z^{s}) = z^{-3} sum_{k=1}^{3} b_k(z) U(z^{s+k}) with s = low - 1.
    QPoly acc;
    for (int k = 1; k <= 3; ++k) acc += modeq::b(k) * vals[static_cast<std::size_t>(k - 1)];
    vals.insert(vals.begin(), acc * z3);
    --low;
  }
  while (r >= low + static_cast<std::int64_t>(vals.size())) {
    // U(z^{s}) = -sum_{k=0}^{2} b_k(z) U(z^{s-3+k}).
    const std::size_t s = vals.size();
    QPoly acc;
    for (int k = 0; k <= 2; ++k) acc += modeq::b(k) * vals[s - 3 + static_cast<std::size_t>(k)];
    vals.push_back(-acc);
  }
  return vals[static_cast<std::size_t>(r - low)];
}

LocalizedElement apply_u(int i, const LocalizedElement& f) {
  check_parity(i);
  if (f.is_zero()) return {};
  const QPoly laurent = f.to_z_laurent();
  // Touch both ends first so the cache is extended once.
  apply_u_z_power(i, laurent.low());
  apply_u_z_power(i, laurent.degree());
  QPoly acc;
  for (std::int64_t e = laurent.low(); e <= laurent.degree(); ++e) {
    const Rat c = laurent.coeff(e);
    if (c == 0) continue;
    acc += apply_u_z_power(i, e).scaled(c);
  }
  return LocalizedElement::from_z_laurent(acc);
}

LocalizedElement apply_u_by_monomials(int i, const LocalizedElement& f) {
  check_parity(i);
  LocalizedElement acc;
  const QPoly& num = f.numerator();
  if (num.is_zero()) return acc;
  for (std::int64_t m = num.low(); m <= num.degree(); ++m) {
    const Rat c = num.coeff(m);
    if (c == 0) continue;
    acc += apply_u_monomial(i, m, f.denom_pow()).scaled(c);
  }
  return acc;
}

}  // namespace cforge
