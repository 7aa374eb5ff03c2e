// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/series/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

QSeries::QSeries() = default;

QSeries::QSeries(std::int64_t offset, IntVec num, Int den, std::int64_t precision)
    : offset_(offset), num_(std::move(num)), den_(std::move(den)), precision_(precision) {
  normalize();
}

void QSeries::normalize() {
  if (den_ == 0) throw SeriesError("zero denominator");
  num_.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, precision_ - offset_)));
  std::size_t lead = 0;
  while (lead < num_.size() && num_[lead] == 0) ++lead;
  if (lead == num_.size()) {
    num_.clear();
    offset_ = precision_;
    den_ = 1;
    return;
  }
  if (lead > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<std::int64_t>(lead);
  }
  if (den_ < 0) {
    den_ = -den_;
    for (Int& c : num_) c = -c;
  }
  if (den_ != 1) {
    Int g = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
      divide_exact(num_, g);
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

QSeries QSeries::from_integers(std::int64_t offset, IntVec coeffs, std::int64_t precision) {
  if (offset + static_cast<std::int64_t>(coeffs.size()) > precision) {
    // Coefficients past the precision are unknown by definition; drop them.
    coeffs.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, precision - offset)));
  }
  return QSeries(offset, std::move(coeffs), Int(1), precision);
}

QSeries QSeries::from_rationals(std::int64_t offset, const std::vector<Rat>& coeffs, std::int64_t precision) {
  Int den = 1;
  for (const Rat& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntVec num;
  num.reserve(coeffs.size());
  for (const Rat& c : coeffs) {
    Int scaled = den / c.get_den();
    num.push_back(scaled * c.get_num());
  }
  if (offset + static_cast<std::int64_t>(num.size()) > precision)
    num.resize(static_cast<std::size_t>(std::max<std::int64_t>(0, precision - offset)));
  return QSeries(offset, std::move(num), std::move(den), precision);
}

QSeries QSeries::monomial(const Rat& c, std::int64_t exponent, std::int64_t precision) {
  if (exponent >= precision) return zero(precision);
  return QSeries(exponent, IntVec{c.get_num()}, c.get_den(), precision);
}

QSeries QSeries::zero(std::int64_t precision) { return QSeries(precision, {}, Int(1), precision); }

Rat QSeries::coeff(std::int64_t exponent) const {
  if (exponent >= precision_)
    throw SeriesError("coefficient at exponent " + std::to_string(exponent) + " is beyond precision " +
                      std::to_string(precision_));
  if (exponent < offset_) return Rat(0);
  return make_rat(num_[static_cast<std::size_t>(exponent - offset_)], den_);
}

Int QSeries::integer_coeff(std::int64_t exponent) const {
  if (!is_integral()) throw SeriesError("series is not integral");
  if (exponent >= precision_) throw SeriesError("coefficient beyond precision");
  if (exponent < offset_) return Int(0);
  return num_[static_cast<std::size_t>(exponent - offset_)];
}

QSeries QSeries::truncated(std::int64_t precision) const {
  if (precision >= precision_) return *this;
  return QSeries(offset_, num_, den_, precision);
}

QSeries QSeries::operator-() const {
  IntVec n = num_;
  for (Int& c : n) c = -c;
  return QSeries(offset_, std::move(n), den_, precision_);
}

namespace {

// Brings a and b over a common denominator and calls op(ai, bi) on aligned numerators.
template <class Op>
QSeries combine(const QSeries& a, const QSeries& b, Op op) {
  const std::int64_t prec = std::min(a.precision(), b.precision());
  const std::int64_t lo = std::min(a.valuation(), b.valuation());
  if (lo >= prec) return QSeries::zero(prec);
  Int den;
  mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  const Int fa = den / a.denominator();
  const Int fb = den / b.denominator();
  IntVec out(static_cast<std::size_t>(prec - lo));
  for (std::size_t i = 0; i < a.numerators().size(); ++i) {
    const std::int64_t e = a.valuation() + static_cast<std::int64_t>(i);
    if (e >= prec) break;
    out[static_cast<std::size_t>(e - lo)] = a.numerators()[i] * fa;
  }
  for (std::size_t i = 0; i < b.numerators().size(); ++i) {
    const std::int64_t e = b.valuation() + static_cast<std::int64_t>(i);
    if (e >= prec) break;
    op(out[static_cast<std::size_t>(e - lo)], Int(b.numerators()[i] * fb));
  }
  Rat unit(1, den);
  return QSeries::from_integers(lo, std::move(out), prec).scaled(unit);
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
  return combine(a, b, [](Int& acc, const Int& v) { acc += v; });
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  return combine(a, b, [](Int& acc, const Int& v) { acc -= v; });
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::int64_t prec = std::min(a.precision_ + b.offset_, b.precision_ + a.offset_);
  const std::int64_t lo = a.offset_ + b.offset_;
  if (a.is_zero() || b.is_zero() || lo >= prec) return QSeries::zero(prec);
  const auto n = static_cast<std::size_t>(prec - lo);
  IntVec prod = multiply_truncated(a.num_, b.num_, n);
  return QSeries(lo, std::move(prod), a.den_ * b.den_, prec);
}

QSeries QSeries::scaled(const Rat& c) const {
  if (c == 0) return zero(precision_);
  IntVec n = num_;
  const Int& p = c.get_num();
  if (p != 1)
    for (Int& v : n) v *= p;
  return QSeries(offset_, std::move(n), den_ * c.get_den(), precision_);
}

QSeries QSeries::shifted(std::int64_t k) const { return QSeries(offset_ + k, num_, den_, precision_ + k); }

QSeries QSeries::inverse(std::optional<std::int64_t> precision) const {
  if (is_zero()) throw SeriesError("not invertible: zero series");
  const std::size_t n = num_.size();
  const Int& c0 = num_[0];
  // B_k = c0^{k+1} b_k where b is the inverse of sum c_j q^j.
  IntVec c0_pow(n + 1);
  c0_pow[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) c0_pow[k] = c0_pow[k - 1] * c0;
  IntVec big_b(n);
  big_b[0] = 1;
  Int acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (num_[j] == 0) continue;
      Int term = num_[j] * c0_pow[j - 1];
      mpz_addmul(acc.get_mpz_t(), term.get_mpz_t(), big_b[k - j].get_mpz_t());
    }
    big_b[k] = -acc;
  }
  IntVec out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = den_ * big_b[k] * c0_pow[n - 1 - k];
  const std::int64_t natural = precision_ - 2 * offset_;
  QSeries r(-offset_, std::move(out), c0_pow[n], natural);
  if (precision && *precision < natural) return r.truncated(*precision);
  return r;
}

QSeries QSeries::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return constant(Rat(1), std::max<std::int64_t>(1, precision_ - offset_));
  QSeries base = *this;
  std::optional<QSeries> result;
  while (e > 0) {
    if (e & 1) result = result ? *result * base : base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return *result;
}

QSeries QSeries::substitute_q_power(std::int64_t k) const {
  if (k < 1) throw SeriesError("substitute_q_power requires k >= 1");
  if (k == 1) return *this;
  IntVec out(num_.empty() ? 0 : (num_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < num_.size(); ++i) out[i * static_cast<std::size_t>(k)] = num_[i];
  return QSeries(offset_ * k, std::move(out), den_, precision_ * k);
}

QSeries QSeries::u3() const {
  const std::int64_t prec = ceil_div(precision_, 3);
  const std::int64_t lo = ceil_div(offset_, 3);
  if (is_zero() || lo >= prec) return zero(prec);
  IntVec out(static_cast<std::size_t>(prec - lo));
  for (std::int64_t m = lo; m < prec; ++m) {
    const std::int64_t idx = 3 * m - offset_;
    if (idx >= 0 && idx < static_cast<std::int64_t>(num_.size()))
      out[static_cast<std::size_t>(m - lo)] = num_[static_cast<std::size_t>(idx)];
  }
  return QSeries(lo, std::move(out), den_, prec);
}

std::optional<std::int64_t> QSeries::first_difference(const QSeries& other) const {
  const std::int64_t prec = std::min(precision_, other.precision_);
  const std::int64_t lo = std::min(offset_, other.offset_);
  for (std::int64_t e = lo; e < prec; ++e) {
    const bool in_a = e >= offset_ && e - offset_ < static_cast<std::int64_t>(num_.size());
    const bool in_b = e >= other.offset_ && e - other.offset_ < static_cast<std::int64_t>(other.num_.size());
    Int lhs = in_a ? Int(num_[static_cast<std::size_t>(e - offset_)] * other.den_) : Int(0);
    Int rhs = in_b ? Int(other.num_[static_cast<std::size_t>(e - other.offset_)] * den_) : Int(0);
    if (lhs != rhs) return e;
  }
  return std::nullopt;
}

bool QSeries::equals_on_overlap(const QSeries& other) const { return !first_difference(other).has_value(); }

std::vector<Rat> QSeries::coefficients(std::int64_t from, std::int64_t to) const {
  std::vector<Rat> out;
  for (std::int64_t e = from; e < to; ++e) out.push_back(coeff(e));
  return out;
}

std::string QSeries::to_string(std::int64_t max_terms) const {
  std::ostringstream os;
  std::int64_t shown = 0;
  for (std::size_t i = 0; i < num_.size() && shown < max_terms; ++i) {
    if (num_[i] == 0) continue;
    const Rat c = make_rat(num_[i], den_);
    const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
    if (shown > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Rat a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) os << (a != 1 ? "*q" : "q");
    if (e != 0 && e != 1) os << '^' << e;
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << precision_ << ")";
  return os.str();
}

}  // namespace cforge
