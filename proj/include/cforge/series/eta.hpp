// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cforge/rational.hpp"
#include "cforge/series/qseries.hpp"

namespace cforge {

/// prod over delta | level of eta(scale * delta * tau)^{r_delta}.
struct EtaQuotient {
  std::int64_t level = 1;
  std::map<std::int64_t, std::int64_t> exponents;
  std::int64_t scale = 1;

  /// Throws std::invalid_argument when a key does not divide the level or scale < 1.
  void validate() const;

  /// Exponents keyed by scale*delta, zero entries dropped.
  std::map<std::int64_t, std::int64_t> scaled_exponents() const;

  /// The quotient f(scale*tau) re-expressed at `level` with divisor set {scale*delta}.
  /// Throws std::invalid_argument unless every scale*delta divides level.
  EtaQuotient rescaled_at(std::int64_t level) const;

  /// (1/24) * sum scale*delta*r_delta.
  Rat q_prefactor() const;

  EtaQuotient operator*(const EtaQuotient& other) const;
  /// Raises every exponent to the e-th power (e may be negative).
  EtaQuotient pow(std::int64_t e) const;

  std::string to_string() const;
};

/// Parses "1=-5,2=1,3=-1,6=5".
std::map<std::int64_t, std::int64_t> parse_exponents(const std::string& text);

/// q^{prefactor} * prod (q^{k delta}; q^{k delta})^{r_delta}, known below exponent T.
/// Throws SeriesError("fractional q-power") when the prefactor is not an integer.
QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t T);

/// (q^stride; q^stride)_inf^e to precision T.
QSeries euler_power_series(std::int64_t stride, std::int64_t e, std::int64_t T);

/// D_k(q) = (q^2;q^2)^k / (q;q)^{3k+1}, known below exponent T.
QSeries dk_series(std::int64_t k, std::int64_t T);

/// Integer coefficients of D_k(q) for exponents 0..T-1 (same values as dk_series).
IntVec dk_coefficients(std::int64_t k, std::int64_t T);

/// D_k(q) coefficients reduced modulo `modulus` (< 2^31), using the fastest residue kernels.
std::vector<std::uint32_t> dk_residues(std::int64_t k, std::int64_t T, std::uint32_t modulus);

namespace eta_library {

/// A(tau) at level 18: q * D_2(q) / D_2(q^9).
EtaQuotient A();
/// Hauptmodul x of X_0(6).
EtaQuotient x();
/// z = 1 + 9x as an eta quotient at level 6.
EtaQuotient z();

}  // namespace eta_library

}  // namespace cforge
