// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Reports over the exponent functions, the h arrays and the composite linear forms.

#pragma once

#include <cstdint>

#include "cforge/engine/report.hpp"

namespace cforge {

/// Exponent inequalities and both exponent tables over 1 <= m <= m_max, 1 <= r <= r_max,
/// 0 <= l <= l_max, plus the recurrence weight expansions.
VerificationReport verify_exponent_lemmas(std::int64_t m_max = 60, std::int64_t r_max = 60, std::int64_t l_max = 12);

/// Shape and divisibility for m <= m_max, n <= min(n_max, 9); the h congruences for family
/// index n <= n_max; and the companion h_1(m,3n+1,1) = 1 (mod 9) row. r_max < 0 means full degree.
VerificationReport verify_h_arrays(std::int64_t n_max = 10, std::int64_t m_max = 9, std::int64_t r_max = -1);

/// The composite forms against their printed coefficients, lattice integrality and the sum mod 9.
VerificationReport verify_that_forms();

}  // namespace cforge
