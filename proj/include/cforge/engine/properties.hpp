// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cforge/engine/report.hpp"

namespace cforge {

/// Associativity, commutativity and distributivity on random truncated series.
VerificationReport property_series_ring(std::uint64_t seed, std::int64_t samples = 50);

/// U_3 linearity and U_3(f(q^3) g) = f U_3(g) on random series.
VerificationReport property_u3(std::uint64_t seed, std::int64_t samples = 50);

/// Ligozat orders are additive over products and negate under inversion (random level-18 quotients).
VerificationReport property_order_additivity(std::uint64_t seed, std::int64_t samples = 50);

/// For random eta quotients passing Newman's criterion, the orders over all cusps sum to zero.
VerificationReport property_degree_zero(std::uint64_t seed, std::int64_t samples = 50);

/// U^(0) maps V^(0)_n into V^(0)_{3n+1}.
VerificationReport property_u0_stability(std::uint64_t seed, std::int64_t samples = 200);

/// U^(1)(f)/9 lies in V^(0)_{3n} for f in V^(1)_n, n = 1 (mod 3).
VerificationReport property_u1_stability(std::uint64_t seed, std::int64_t samples = 200);

/// U^(0)(U^(1)(f))/9 lies in V^(1)_{9n+1} for f in V^(1)_n, n = 1 (mod 3).
VerificationReport property_composite_stability(std::uint64_t seed, std::int64_t samples = 200);

/// Worker count from CONGRUENCE_FORGE_THREADS (default: hardware concurrency, at least 1).
unsigned worker_threads();

}  // namespace cforge
