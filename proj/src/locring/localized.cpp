// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/localized.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cforge {

QPoly one_plus_9x_pow(std::int64_t e) {
  static std::mutex mu;
  static std::map<std::int64_t, QPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  IntVec c(static_cast<std::size_t>(e + 1));
  for (std::int64_t k = 0; k <= e; ++k)
    c[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(k)) *
                                     pow_int(9, static_cast<unsigned long>(k));
  QPoly p = QPoly::from_integers(std::move(c));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(e, p);
  return p;
}

LocalizedElement::LocalizedElement(QPoly numerator, std::int64_t denom_pow)
    : num_(std::move(numerator)), n_(denom_pow) {
  if (!num_.is_polynomial()) throw std::invalid_argument("numerator must be a polynomial in x");
  if (n_ < 0) throw std::invalid_argument("denominator power must be nonnegative");
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  const std::int64_t n = std::max(a.n_, b.n_);
  return {a.num_ * one_plus_9x_pow(n - a.n_) + b.num_ * one_plus_9x_pow(n - b.n_), n};
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  return {a.num_ * b.num_, a.n_ + b.n_};
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
  return a.num_ * one_plus_9x_pow(b.n_) == b.num_ * one_plus_9x_pow(a.n_);
}

LocalizedElement LocalizedElement::normalized() const {
  LocalizedElement out = *this;
  if (out.num_.is_zero()) return {QPoly(), 0};
  QPoly q;
  while (out.n_ > 0 && out.num_.divide_by_linear(Int(9), q)) {
    out.num_ = q;
    --out.n_;
  }
  return out;
}

LocalizedElement LocalizedElement::with_denom_pow(std::int64_t n) const {
  if (n >= n_) return {num_ * one_plus_9x_pow(n - n_), n};
  LocalizedElement out = *this;
  QPoly q;
  while (out.n_ > n) {
    if (!out.num_.divide_by_linear(Int(9), q))
      throw std::domain_error("element needs denominator power above " + std::to_string(n));
    out.num_ = q;
    --out.n_;
  }
  return out;
}

QPoly LocalizedElement::to_z_laurent() const {
  // x = (z - 1)/9.
  return num_.compose_affine(Rat(1, 9), Rat(-1, 9)).shifted(-n_);
}

LocalizedElement LocalizedElement::from_z_laurent(const QPoly& laurent) {
  if (laurent.is_zero()) return {};
  const std::int64_t n = std::max<std::int64_t>(0, -laurent.low());
  const QPoly in_z = laurent.shifted(n);
  return {in_z.compose_affine(Rat(9), Rat(1)), n};
}

QSeries LocalizedElement::to_series(const QSeries& x_series) const {
  const std::int64_t T = x_series.precision();
  QSeries acc = QSeries::zero(T);
  // Horner in x over the numerator.
  if (!num_.is_zero()) {
    acc = QSeries::constant(num_.coeff(num_.degree()), T);
    for (std::int64_t k = num_.degree() - 1; k >= 0; --k) acc = acc * x_series + QSeries::constant(num_.coeff(k), T);
  }
  if (n_ == 0) return acc;
  const QSeries z = QSeries::constant(Rat(1), T) + x_series.scaled(Rat(9));
  return acc * z.inverse().pow(n_);
}

std::string LocalizedElement::to_string() const {
  if (n_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(1+9x)^" + std::to_string(n_);
}

}  // namespace cforge
