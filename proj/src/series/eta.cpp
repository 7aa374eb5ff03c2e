// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/series/eta.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cforge/kernels/residue_kernels.hpp"

namespace cforge {
namespace {

using kernels::PentagonalTerm;
using kernels::pentagonal_terms;

// f <- f * (q^s;q^s) in place; walking downward keeps the lower entries unmodified.
void mul_euler_exact(IntVec& f, std::size_t s) {
  const std::size_t n = f.size();
  const auto terms = pentagonal_terms((n + s - 1) / s);
  for (std::size_t i = n; i-- > 0;) {
    for (const PentagonalTerm& t : terms) {
      const std::size_t shift = t.offset * s;
      if (shift > i) break;
      if (t.negative)
        f[i] -= f[i - shift];
      else
        f[i] += f[i - shift];
    }
  }
}

// f <- f / (q^s;q^s) in place.
void div_euler_exact(IntVec& f, std::size_t s) {
  const std::size_t n = f.size();
  const auto terms = pentagonal_terms((n + s - 1) / s);
  for (std::size_t i = 0; i < n; ++i) {
    for (const PentagonalTerm& t : terms) {
      const std::size_t shift = t.offset * s;
      if (shift > i) break;
      if (t.negative)
        f[i] += f[i - shift];
      else
        f[i] -= f[i - shift];
    }
  }
}

void apply_euler_power(IntVec& f, std::int64_t stride, std::int64_t e) {
  const auto s = static_cast<std::size_t>(stride);
  for (std::int64_t i = 0; i < e; ++i) mul_euler_exact(f, s);
  for (std::int64_t i = 0; i < -e; ++i) div_euler_exact(f, s);
}

}  // namespace

void EtaQuotient::validate() const {
  if (level < 1) throw std::invalid_argument("level must be positive");
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  for (const auto& [delta, r] : exponents)
    if (delta < 1 || level % delta != 0)
      throw std::invalid_argument("eta divisor " + std::to_string(delta) + " does not divide level " +
                                  std::to_string(level));
}

std::map<std::int64_t, std::int64_t> EtaQuotient::scaled_exponents() const {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [delta, r] : exponents)
    if (r != 0) out[delta * scale] += r;
  return out;
}

EtaQuotient EtaQuotient::rescaled_at(std::int64_t new_level) const {
  EtaQuotient out{new_level, scaled_exponents(), 1};
  out.validate();
  return out;
}

Rat EtaQuotient::q_prefactor() const {
  std::int64_t sum = 0;
  for (const auto& [delta, r] : exponents) sum += scale * delta * r;
  return make_rat(Int(static_cast<long>(sum)), Int(24));
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
  const std::int64_t lcm = std::lcm(level * scale, other.level * other.scale);
  EtaQuotient out{lcm, scaled_exponents(), 1};
  for (const auto& [delta, r] : other.scaled_exponents()) out.exponents[delta] += r;
  std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
  return out;
}

EtaQuotient EtaQuotient::pow(std::int64_t e) const {
  EtaQuotient out = *this;
  for (auto& [delta, r] : out.exponents) r *= e;
  std::erase_if(out.exponents, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  os << "level " << level << " scale " << scale << " {";
  bool first = true;
  for (const auto& [delta, r] : exponents) {
    os << (first ? "" : ",") << delta << '=' << r;
    first = false;
  }
  os << '}';
  return os.str();
}

std::map<std::int64_t, std::int64_t> parse_exponents(const std::string& text) {
  std::map<std::int64_t, std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected delta=r, got '" + item + "'");
    try {
      out[std::stoll(item.substr(0, eq))] += std::stoll(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("expected delta=r, got '" + item + "'");
    }
  }
  return out;
}

QSeries euler_power_series(std::int64_t stride, std::int64_t e, std::int64_t T) {
  if (T <= 0) return QSeries::zero(T);
  IntVec f(static_cast<std::size_t>(T));
  f[0] = 1;
  apply_euler_power(f, stride, e);
  return QSeries::from_integers(0, std::move(f), T);
}

QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t T) {
  eq.validate();
  const Rat pre = eq.q_prefactor();
  if (!is_integer(pre)) throw SeriesError("fractional q-power");
  const std::int64_t v = pre.get_num().get_si();
  if (v >= T) return QSeries::zero(T);
  IntVec f(static_cast<std::size_t>(T - v));
  f[0] = 1;
  for (const auto& [delta, r] : eq.scaled_exponents()) apply_euler_power(f, delta, r);
  return QSeries::from_integers(v, std::move(f), T);
}

IntVec dk_coefficients(std::int64_t k, std::int64_t T) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (T <= 0) return {};
  IntVec f(static_cast<std::size_t>(T));
  f[0] = 1;
  apply_euler_power(f, 2, k);
  apply_euler_power(f, 1, -(3 * k + 1));
  return f;
}

QSeries dk_series(std::int64_t k, std::int64_t T) { return QSeries::from_integers(0, dk_coefficients(k, T), T); }

std::vector<std::uint32_t> dk_residues(std::int64_t k, std::int64_t T, std::uint32_t modulus) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (modulus < 2 || modulus > kernels::kMaxModulus) throw std::invalid_argument("modulus out of range");
  const kernels::ResidueKernels& kern = kernels::best_kernels();
  const auto n = static_cast<std::size_t>(std::max<std::int64_t>(T, 0));
  std::vector<std::uint32_t> f(n), tmp(n);
  if (n == 0) return f;
  f[0] = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    kern.mul_euler(tmp.data(), f.data(), n, 2, modulus);
    f.swap(tmp);
  }
  for (std::int64_t i = 0; i < 3 * k + 1; ++i) kern.div_euler(f.data(), n, 1, modulus);
  return f;
}

namespace eta_library {

EtaQuotient A() { return {18, {{1, -7}, {2, 2}, {9, 7}, {18, -2}}, 1}; }
EtaQuotient x() { return {6, {{1, -5}, {2, 1}, {3, -1}, {6, 5}}, 1}; }
EtaQuotient z() { return {6, {{1, -9}, {2, 9}, {3, 3}, {6, -3}}, 1}; }

}  // namespace eta_library

}  // namespace cforge
