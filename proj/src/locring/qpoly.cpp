// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cforge {

QPoly::QPoly(std::int64_t low, IntVec num, Int den) : low_(low), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void QPoly::normalize() {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  std::size_t lead = 0;
  while (lead < num_.size() && num_[lead] == 0) ++lead;
  if (lead == num_.size()) {
    num_.clear();
    low_ = 0;
    den_ = 1;
    return;
  }
  if (lead > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
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

QPoly QPoly::from_integers(std::vector<Int> coeffs, std::int64_t low) { return QPoly(low, std::move(coeffs), Int(1)); }

QPoly QPoly::from_rationals(const std::vector<Rat>& coeffs, std::int64_t low) {
  Int den = 1;
  for (const Rat& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntVec num;
  num.reserve(coeffs.size());
  for (const Rat& c : coeffs) num.push_back((den / c.get_den()) * c.get_num());
  return QPoly(low, std::move(num), std::move(den));
}

QPoly QPoly::monomial(const Rat& c, std::int64_t exponent) { return QPoly(exponent, IntVec{c.get_num()}, c.get_den()); }

Rat QPoly::coeff(std::int64_t exponent) const {
  if (exponent < low_ || exponent > degree()) return Rat(0);
  return make_rat(num_[static_cast<std::size_t>(exponent - low_)], den_);
}

QPoly QPoly::operator-() const {
  IntVec n = num_;
  for (Int& c : n) c = -c;
  return QPoly(low_, std::move(n), den_);
}

namespace {

template <class Op>
QPoly combine(const QPoly& a, const QPoly& b, Op op) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  std::int64_t lo;
  std::int64_t hi;
  if (a.is_zero()) {
    lo = b.low();
    hi = b.degree();
  } else if (b.is_zero()) {
    lo = a.low();
    hi = a.degree();
  } else {
    lo = std::min(a.low(), b.low());
    hi = std::max(a.degree(), b.degree());
  }
  Int den;
  mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  const Int fa = den / a.denominator();
  const Int fb = den / b.denominator();
  IntVec out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.numerators().size(); ++i)
    out[static_cast<std::size_t>(a.low() - lo) + i] = a.numerators()[i] * fa;
  for (std::size_t i = 0; i < b.numerators().size(); ++i)
    op(out[static_cast<std::size_t>(b.low() - lo) + i], Int(b.numerators()[i] * fb));
  return QPoly::from_integers(std::move(out), lo).scaled(Rat(Int(1), den));
}

}  // namespace

QPoly operator+(const QPoly& a, const QPoly& b) {
  return combine(a, b, [](Int& acc, const Int& v) { acc += v; });
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  return combine(a, b, [](Int& acc, const Int& v) { acc -= v; });
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  return QPoly(a.low_ + b.low_, multiply(a.num_, b.num_), a.den_ * b.den_);
}

bool operator==(const QPoly& a, const QPoly& b) {
  return a.low_ == b.low_ && a.den_ == b.den_ && a.num_ == b.num_;
}

QPoly QPoly::scaled(const Rat& c) const {
  if (c == 0 || is_zero()) return QPoly();
  IntVec n = num_;
  if (c.get_num() != 1)
    for (Int& v : n) v *= c.get_num();
  return QPoly(low_, std::move(n), den_ * c.get_den());
}

QPoly QPoly::shifted(std::int64_t k) const {
  if (is_zero()) return *this;
  return QPoly(low_ + k, num_, den_);
}

QPoly QPoly::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("QPoly::pow requires e >= 0");
  QPoly result = constant(Rat(1));
  QPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// With A = pa*qb, B = pb*qa, Q = qa*qb: p(a t + b) = Q^{-d} sum c_k Q^{d-k} (A t + B)^k,
// evaluated as a Taylor shift by B followed by the substitution y = A t.
QPoly QPoly::compose_affine(const Rat& a, const Rat& b) const {
  if (!is_polynomial()) throw std::invalid_argument("compose_affine needs a polynomial");
  if (is_zero()) return *this;
  const std::int64_t d = degree();
  const auto n = static_cast<std::size_t>(d + 1);
  const Int A = a.get_num() * b.get_den();
  const Int B = b.get_num() * a.get_den();
  const Int Q = a.get_den() * b.get_den();
  IntVec g(n);
  Int qpow = 1;
  for (std::int64_t k = d; k >= 0; --k) {
    if (k >= low_) g[static_cast<std::size_t>(k)] = num_[static_cast<std::size_t>(k - low_)] * qpow;
    if (k > 0) qpow *= Q;
  }
  if (B != 0) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j-- > i;) mpz_addmul(g[j].get_mpz_t(), B.get_mpz_t(), g[j + 1].get_mpz_t());
  }
  if (A != 1) {
    Int apow = 1;
    for (std::size_t j = 0; j < n; ++j) {
      g[j] *= apow;
      apow *= A;
    }
  }
  return QPoly(0, std::move(g), den_ * qpow);
}

bool QPoly::divide_by_linear(const Int& c, QPoly& quotient) const {
  if (is_zero()) {
    quotient = QPoly();
    return true;
  }
  const std::size_t n = num_.size();
  if (n == 1) return false;
  IntVec q(n - 1);
  q[0] = num_[0];
  for (std::size_t k = 1; k + 1 < n; ++k) q[k] = num_[k] - c * q[k - 1];
  if (num_[n - 1] != c * q[n - 2]) return false;
  quotient = QPoly(low_, std::move(q), den_);
  return true;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const Rat c = make_rat(num_[i], den_);
    const std::int64_t e = low_ + static_cast<std::int64_t>(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rat mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || e == 0) os << mag.get_str();
    if (e != 0) os << (unit ? "" : "*") << var;
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace cforge
