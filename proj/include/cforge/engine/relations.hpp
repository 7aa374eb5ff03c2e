// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "cforge/engine/report.hpp"
#include "cforge/locring/qpoly.hpp"
#include "cforge/series/qseries.hpp"

namespace cforge {

/// Series of U^(i)(x^m/(1+9x)^n) computed as U_3(A^{1-i} x^m z^{-n}), to precision T.
QSeries u_series(int i, std::int64_t m, std::int64_t n, std::int64_t T);

/// The polynomial P of degree <= max_degree with P(x) = s to the precision of s, found by peeling
/// off leading terms (x = q + O(q^2)); nullopt if s is not of that form or the precision is too short.
std::optional<QPoly> x_polynomial_from_series(const QSeries& s, const QSeries& x_series, std::int64_t max_degree);

/// The representation of L_1 recovered from the series (1+9x) L_1 and compared with
/// (33x+1392x^2+21120x^3+138240x^4+331776x^5)/(1+9x); the representation re-expanded against the
/// direct L_1 series to T terms; and agreement with U^(0)(1) from both U-operator routes.
VerificationReport verify_l1_representation(std::int64_t T = 200);

/// The six fundamental relations as q-series identities to T terms, plus the pole certificates
/// for their normalized left-hand sides on X_0(18).
VerificationReport verify_fundamental_relations(std::int64_t T = 100);

/// The 18 derived relations U^(i)(x^m/(1+9x)^n), 1 <= m, n <= 3, against series to T terms.
VerificationReport verify_initial_relations(std::int64_t T = 100);

/// z - 1 - 9x = 0, z = 1 (mod 9), the x and z modular equations as series to T terms, and the
/// exact polynomial derivation of the z equation from the x equation.
VerificationReport verify_modular_equations(std::int64_t T = 200);

/// Valuation bounds on U_3 images: normalized fundamental left-hand sides have pole order at
/// most 11 with principal part and constant matching the right-hand side, U_3 of holomorphic
/// input is holomorphic, and L_1 starts at q^1.
VerificationReport verify_u3_contract(std::int64_t T = 100);

}  // namespace cforge
