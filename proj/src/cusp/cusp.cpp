// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/cusp/cusp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cforge {
namespace {

std::int64_t mod_n(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

std::string Cusp::to_string() const {
  if (is_infinity()) return "inf";
  return std::to_string(a) + "/" + std::to_string(c);
}

Cusp Cusp::parse(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinity();
  const auto slash = text.find('/');
  std::int64_t a = 0;
  std::int64_t c = 1;
  try {
    std::size_t used = 0;
    a = std::stoll(text.substr(0, slash), &used);
    if (used != text.substr(0, slash).size()) throw std::invalid_argument("trailing characters");
    if (slash != std::string::npos) {
      const std::string den = text.substr(slash + 1);
      c = std::stoll(den, &used);
      if (used != den.size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad cusp '" + text + "'");
  }
  if (c == 0) {
    if (a == 0) throw std::invalid_argument("bad cusp '0/0'");
    return infinity();
  }
  if (c < 0) {
    a = -a;
    c = -c;
  }
  const std::int64_t g = gcd64(a, c);
  return {a / g, c / g};
}

std::vector<Cusp> cusps_of(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  std::vector<Cusp> candidates{Cusp::infinity()};
  for (std::int64_t c : divisors(N)) {
    if (c == N) continue;
    const std::int64_t g = gcd64(c, N / c);
    for (std::int64_t u = 0; u < g; ++u) {
      if (gcd64(u, g) != 1) continue;
      std::int64_t a = u;
      while (gcd64(a, c) != 1) a += g;
      candidates.push_back({a, c});
    }
  }
  std::sort(candidates.begin() + 1, candidates.end(),
            [](const Cusp& l, const Cusp& r) { return l.c != r.c ? l.c < r.c : l.a < r.a; });
  std::vector<Cusp> out;
  for (const Cusp& cand : candidates) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Cusp& k) { return cusp_equivalent(k, cand, N); });
    if (!seen) out.push_back(cand);
  }
  return out;
}

std::int64_t cusp_count_formula(std::int64_t N) {
  std::int64_t total = 0;
  for (std::int64_t c : divisors(N)) total += euler_phi(gcd64(c, N / c));
  return total;
}

bool cusp_equivalent(const Cusp& c1, const Cusp& c2, std::int64_t N) {
  for (std::int64_t y = 0; y < N; ++y) {
    if (gcd64(y, N) != 1) continue;
    if (mod_n(c2.c - y * c1.c, N) != 0) continue;
    for (std::int64_t j = 0; j < N; ++j)
      if (mod_n(y * c2.a - c1.a - j * c1.c, N) == 0) return true;
  }
  return false;
}

std::int64_t cusp_width(const Cusp& cusp, std::int64_t N) { return N / gcd64(cusp.c * cusp.c, N); }

NewmanBreakdown newman_is_modular(const EtaQuotient& eq) {
  const EtaQuotient q = eq.rescaled_at(eq.level);
  const std::int64_t N = q.level;
  NewmanBreakdown b;
  std::int64_t weight = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  Int product = 1;
  for (const auto& [delta, r] : q.exponents) {
    weight += r;
    s1 += delta * r;
    s2 += (N / delta) * r;
    product *= pow_int(static_cast<long>(delta), static_cast<unsigned long>(r < 0 ? -r : r));
  }
  b.weight_zero = weight == 0;
  b.sum_delta_r = mod_n(s1, 24) == 0;
  b.sum_cofactor_r = mod_n(s2, 24) == 0;
  b.square_product = mpz_perfect_square_p(product.get_mpz_t()) != 0;
  return b;
}

Rat ligozat_order(const EtaQuotient& eq, const Cusp& cusp) {
  const EtaQuotient q = eq.rescaled_at(eq.level);
  const std::int64_t N = q.level;
  Rat sum = 0;
  for (const auto& [delta, r] : q.exponents) {
    const std::int64_t g = gcd64(cusp.c, delta);
    sum += Rat(static_cast<long>(r * g * g), static_cast<unsigned long>(delta));
  }
  sum.canonicalize();
  const std::int64_t gc = gcd64(cusp.c * cusp.c, N);
  Rat factor(static_cast<long>(N), static_cast<unsigned long>(24 * gc));
  factor.canonicalize();
  return factor * sum;
}

Rat radu_lower_bound(const std::map<std::int64_t, std::int64_t>& gen, std::int64_t m, std::int64_t t,
                     const std::map<std::int64_t, std::int64_t>& prefactor, const Cusp& cusp, std::int64_t N) {
  if (m < 1 || t < 0 || t >= m) throw std::invalid_argument("require 0 <= t < m");
  const std::int64_t a = cusp.a;
  const std::int64_t c = cusp.c;
  const std::int64_t g24 = gcd64(m * m - 1, 24);
  std::optional<Rat> best;
  for (std::int64_t l = 0; l < m; ++l) {
    Rat s = 0;
    for (const auto& [delta, r] : gen) {
      const std::int64_t g = gcd64(delta * (a + l * c * g24), m * c);
      s += Rat(static_cast<long>(r * g * g), static_cast<unsigned long>(delta * m));
    }
    s.canonicalize();
    s /= 24;
    if (!best || s < *best) best = s;
  }
  Rat pre = 0;
  for (const auto& [lambda, s] : prefactor) {
    const std::int64_t g = gcd64(lambda, c);
    pre += Rat(static_cast<long>(s * g * g), static_cast<unsigned long>(lambda));
  }
  pre.canonicalize();
  pre /= 24;
  Rat factor(static_cast<long>(N), static_cast<unsigned long>(gcd64(c * c, N)));
  factor.canonicalize();
  return factor * (*best + pre);
}

Rat CuspOrderTable::at(const Cusp& cusp) const {
  for (const auto& [k, v] : rows)
    if (cusp_equivalent(k, cusp, level)) return v;
  throw std::invalid_argument("cusp " + cusp.to_string() + " not in table");
}

Rat CuspOrderTable::degree() const {
  Rat sum = 0;
  for (const auto& row : rows) sum += row.second;
  return sum;
}

CuspOrderTable order_table(const EtaQuotient& eq, std::int64_t level) {
  const EtaQuotient q = eq.rescaled_at(level);
  CuspOrderTable table{level, {}};
  for (const Cusp& cusp : cusps_of(level)) table.rows.emplace_back(cusp, ligozat_order(q, cusp));
  return table;
}

SinglePoleCertificate certify_single_pole(const std::vector<EtaFactor>& factors, const Cusp& target,
                                          std::int64_t level) {
  SinglePoleCertificate cert;
  cert.table.level = level;
  for (const Cusp& cusp : cusps_of(level)) cert.table.rows.emplace_back(cusp, Rat(0));
  for (const EtaFactor& f : factors) {
    const CuspOrderTable t = order_table(f.quotient, level);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      cert.table.rows[i].second += t.rows[i].second * static_cast<long>(f.exponent);
  }
  cert.single_pole = true;
  for (const auto& [cusp, ord] : cert.table.rows)
    if (ord < 0 && !cusp_equivalent(cusp, target, level)) cert.single_pole = false;
  return cert;
}

}  // namespace cforge
