// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "cforge/locring/qpoly.hpp"
#include "cforge/series/qseries.hpp"

namespace cforge {

/// numerator(x) / (1+9x)^denom_pow, an element of Q[x] localized at powers of 1+9x.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  /// Throws std::invalid_argument if numerator has negative powers of x or denom_pow < 0.
  LocalizedElement(QPoly numerator, std::int64_t denom_pow);

  static LocalizedElement x_power(std::int64_t m, std::int64_t n = 0) {
    return LocalizedElement(QPoly::monomial(Rat(1), m), n);
  }

  const QPoly& numerator() const { return num_; }
  std::int64_t denom_pow() const { return n_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Integer numerator coefficients; independent of the denominator power chosen.
  bool is_integral() const { return num_.is_integral(); }

  LocalizedElement operator-() const { return {-num_, n_}; }
  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  LocalizedElement& operator+=(const LocalizedElement& b) { return *this = *this + b; }
  LocalizedElement scaled(const Rat& c) const { return {num_.scaled(c), n_}; }
  /// Multiplication by a polynomial in x.
  LocalizedElement times(const QPoly& p) const { return {num_ * p, n_}; }

  /// Cross-multiplied equality.
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);

  /// Same element with the denominator power lowered while 1+9x divides the numerator.
  LocalizedElement normalized() const;

  /// Same element over (1+9x)^n exactly; throws std::domain_error if n is too small.
  LocalizedElement with_denom_pow(std::int64_t n) const;

  /// As a Laurent polynomial in z = 1 + 9x.
  QPoly to_z_laurent() const;
  static LocalizedElement from_z_laurent(const QPoly& laurent);

  /// Expansion as a q-series, given the series of x to the required precision.
  QSeries to_series(const QSeries& x_series) const;

  std::string to_string() const;

 private:
  QPoly num_;
  std::int64_t n_ = 0;
};

/// The polynomial 1 + 9x raised to e.
QPoly one_plus_9x_pow(std::int64_t e);

}  // namespace cforge
