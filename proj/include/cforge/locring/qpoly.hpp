// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cforge/rational.hpp"
#include "cforge/series/int_poly.hpp"

namespace cforge {

/// Exact Laurent polynomial sum_k c_k t^k with rational coefficients.
///
/// Stored as integer numerators over one positive common denominator, starting at
/// the lowest exponent with a nonzero coefficient.
class QPoly {
 public:
  QPoly() = default;

  /// coeffs[i] is the coefficient of t^{low + i}.
  static QPoly from_integers(std::vector<Int> coeffs, std::int64_t low = 0);
  static QPoly from_rationals(const std::vector<Rat>& coeffs, std::int64_t low = 0);
  static QPoly monomial(const Rat& c, std::int64_t exponent);
  static QPoly constant(const Rat& c) { return monomial(c, 0); }

  bool is_zero() const { return num_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  std::int64_t low() const { return low_; }
  /// Highest exponent with a nonzero coefficient (-1 for the zero polynomial when low() = 0).
  std::int64_t degree() const { return low_ + static_cast<std::int64_t>(num_.size()) - 1; }
  bool is_polynomial() const { return low_ >= 0; }

  Rat coeff(std::int64_t exponent) const;
  const IntVec& numerators() const { return num_; }
  const Int& denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
  friend bool operator==(const QPoly& a, const QPoly& b);

  QPoly scaled(const Rat& c) const;
  /// Multiplication by t^k.
  QPoly shifted(std::int64_t k) const;
  QPoly pow(std::int64_t e) const;

  /// p(a*t + b) for a polynomial p (low() >= 0).
  QPoly compose_affine(const Rat& a, const Rat& b) const;

  /// Exact quotient by (1 + c*t) when it divides; returns false otherwise.
  bool divide_by_linear(const Int& c, QPoly& quotient) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  QPoly(std::int64_t low, IntVec num, Int den);
  void normalize();

  std::int64_t low_ = 0;
  IntVec num_;
  Int den_ = 1;
};

}  // namespace cforge
