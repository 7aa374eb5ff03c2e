// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/l_series.hpp"

#include <algorithm>
#include <string>

#include "cforge/locring/exponents.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {

QSeries l_series_direct(std::int64_t alpha, std::int64_t T) {
  if (alpha < 0 || T < 1) throw std::invalid_argument("l_series needs alpha >= 0, T >= 1");
  if (alpha == 0) return QSeries::constant(Rat(1), T);
  const std::int64_t lambda = exponents::lambda(alpha);
  const std::int64_t step = pow3(static_cast<unsigned long>(alpha)).get_si();
  const std::int64_t count = std::max<std::int64_t>(T - 1, 0);
  const IntVec d = dk_coefficients(2, step * std::max<std::int64_t>(count - 1, 0) + lambda + 1);
  IntVec sifted(static_cast<std::size_t>(count));
  for (std::int64_t n = 0; n < count; ++n) sifted[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(step * n + lambda)];
  const QSeries sum = QSeries::from_integers(1, std::move(sifted), T);
  const std::int64_t stride = alpha % 2 == 1 ? 3 : 1;
  const QSeries prefactor = euler_power_series(stride, 7, T) * euler_power_series(2 * stride, -2, T);
  return prefactor * sum;
}

QSeries l_series_iterative(std::int64_t alpha, std::int64_t T) {
  if (alpha < 0 || T < 1) throw std::invalid_argument("l_series needs alpha >= 0, T >= 1");
  const std::int64_t start = T * pow3(static_cast<unsigned long>(alpha)).get_si();
  QSeries L = QSeries::constant(Rat(1), start);
  for (std::int64_t j = 1; j <= alpha; ++j) {
    if ((j - 1) % 2 == 0) L = eta_quotient_series(eta_library::A(), L.precision()) * L;
    L = L.u3();
  }
  return L.truncated(T);
}

QSeries l_series(std::int64_t alpha, std::int64_t T) {
  const QSeries direct = l_series_direct(alpha, T);
  const QSeries iterative = l_series_iterative(alpha, T);
  if (auto diff = direct.first_difference(iterative))
    throw SeriesMismatch("L_" + std::to_string(alpha) + " constructions differ at q^" + std::to_string(*diff));
  return direct;
}

}  // namespace cforge
