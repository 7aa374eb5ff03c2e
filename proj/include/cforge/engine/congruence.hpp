// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cforge/engine/report.hpp"

namespace cforge {

/// For alpha <= alpha_max and n = lambda_alpha + k 3^alpha, k < cases_per_alpha, checks
/// 3^{beta(alpha)} | d_2(n) in exact arithmetic, the weaker exponent alpha (odd) or alpha + 1
/// (even), and that the residue kernels reproduce d_2(n) mod 3^{beta}.
VerificationReport check_congruence_direct(std::int64_t alpha_max = 6, std::int64_t cases_per_alpha = 50);

}  // namespace cforge
