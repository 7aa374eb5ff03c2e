// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>

#include "cforge/series/qseries.hpp"

namespace cforge {

class SeriesMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// L_alpha from its prefactor times the sifted d_2 sum, to precision T.
QSeries l_series_direct(std::int64_t alpha, std::int64_t T);

/// L_alpha by iterating U^(0), U^(1), ... from L_0 = 1, to precision T.
QSeries l_series_iterative(std::int64_t alpha, std::int64_t T);

/// Both constructions; throws SeriesMismatch if they differ below T.
QSeries l_series(std::int64_t alpha, std::int64_t T);

}  // namespace cforge
