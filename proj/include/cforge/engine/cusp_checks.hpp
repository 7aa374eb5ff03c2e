// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cforge/engine/report.hpp"

namespace cforge {

/// Ligozat orders of A, x, x(3tau), z(3tau) at the eight cusps of X_0(18) against the printed
/// table (32 entries), plus the orders of x and z on X_0(6). Printed representatives are
/// matched to the enumerated ones by cusp equivalence.
VerificationReport verify_cusp_orders();

/// Order lower bounds for L_1 on X_0(6) from the sifted D_2 generating function
/// (m = 3, t = 2, prefactor eta(3tau)^7 eta(6tau)^-2) against the displayed 1/3, 4/3, -1, -4.
VerificationReport verify_radu_bounds();

}  // namespace cforge
