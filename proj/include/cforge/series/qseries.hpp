// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/rational.hpp"
#include "cforge/series/int_poly.hpp"

namespace cforge {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series in q with exact rational coefficients.
///
/// A QSeries knows every coefficient at exponents below precision(); exponents
/// at or above it are unknown, never zero. Internally the coefficients share a
/// single positive denominator, so the arithmetic kernels run on integers.
/// Values are immutable once built.
class QSeries {
 public:
  /// The zero series known to precision 0.
  QSeries();

  /// Coefficient i of `coeffs` sits at exponent offset+i; precision must be >= offset + coeffs.size().
  /// Exponents in [offset + coeffs.size(), precision) are zero.
  static QSeries from_integers(std::int64_t offset, IntVec coeffs, std::int64_t precision);
  static QSeries from_rationals(std::int64_t offset, const std::vector<Rat>& coeffs, std::int64_t precision);
  static QSeries monomial(const Rat& c, std::int64_t exponent, std::int64_t precision);
  static QSeries constant(const Rat& c, std::int64_t precision) { return monomial(c, 0, precision); }
  static QSeries zero(std::int64_t precision);

  std::int64_t precision() const { return precision_; }
  /// Exponent of the first nonzero coefficient; equals precision() for a zero series.
  std::int64_t valuation() const { return offset_; }
  bool is_zero() const { return num_.empty(); }

  /// Coefficient at `exponent`; throws SeriesError if exponent >= precision().
  Rat coeff(std::int64_t exponent) const;
  /// Integer coefficient; throws if the series is not integral.
  Int integer_coeff(std::int64_t exponent) const;

  /// True when every known coefficient has denominator 1.
  bool is_integral() const { return den_ == 1; }
  const Int& denominator() const { return den_; }
  /// Numerators over denominator(), starting at valuation().
  const IntVec& numerators() const { return num_; }

  QSeries truncated(std::int64_t precision) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  QSeries scaled(const Rat& c) const;
  /// Multiplication by q^k.
  QSeries shifted(std::int64_t k) const;

  /// 1/a; the result is additionally truncated to `precision` when given.
  QSeries inverse(std::optional<std::int64_t> precision = std::nullopt) const;
  QSeries pow(std::int64_t e) const;

  /// f(q) -> f(q^k) for k >= 1.
  QSeries substitute_q_power(std::int64_t k) const;

  /// Atkin U_3: coefficient of q^m in the result is the coefficient of q^{3m} here.
  QSeries u3() const;

  /// Coefficientwise equality on the common known range.
  bool equals_on_overlap(const QSeries& other) const;
  /// First exponent (below the common precision) where the two series differ.
  std::optional<std::int64_t> first_difference(const QSeries& other) const;

  /// Coefficients in [from, to) as rationals (to <= precision()).
  std::vector<Rat> coefficients(std::int64_t from, std::int64_t to) const;

  std::string to_string(std::int64_t max_terms = 8) const;

 private:
  QSeries(std::int64_t offset, IntVec num, Int den, std::int64_t precision);
  void normalize();

  std::int64_t offset_ = 0;
  IntVec num_;
  Int den_ = 1;
  std::int64_t precision_ = 0;
};

inline QSeries u3(const QSeries& f) { return f.u3(); }

}  // namespace cforge
