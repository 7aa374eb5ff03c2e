// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cforge/engine/report.hpp"

namespace cforge {

/// f_1 = L_1/3, f_{2a} = U^(1)(f_{2a-1})/9, f_{2a+1} = U^(0)(f_{2a}); for alpha <= alpha_max checks
/// membership of f_alpha in V^(alpha mod 2)_{psi(alpha)} and f_alpha = L_alpha / 3^{beta(alpha)} as
/// series. T = 0 picks the smallest precision covering min_overlap coefficients and the numerator
/// degree; a positive T below that is refused with a failure row.
VerificationReport stability_iteration(std::int64_t alpha_max = 5, std::int64_t T = 0, std::int64_t min_overlap = 100);

}  // namespace cforge
