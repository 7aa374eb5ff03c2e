// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Dense integer coefficient-vector primitives shared by QSeries and QPoly.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cforge/rational.hpp"

namespace cforge {

using IntVec = std::vector<Int>;

/// Below this length the product falls back to schoolbook convolution.
inline constexpr std::size_t kKaratsubaThreshold = 24;

/// Full product a*b (length |a|+|b|-1, empty if either is empty).
IntVec multiply(std::span<const Int> a, std::span<const Int> b);

/// Product truncated to the first n coefficients.
IntVec multiply_truncated(std::span<const Int> a, std::span<const Int> b, std::size_t n);

/// Schoolbook convolution, kept as the oracle for multiply().
IntVec multiply_schoolbook(std::span<const Int> a, std::span<const Int> b);

/// gcd of all coefficients (0 for an all-zero vector).
Int content(std::span<const Int> v);

/// Divides every entry exactly by d.
void divide_exact(IntVec& v, const Int& d);

}  // namespace cforge
