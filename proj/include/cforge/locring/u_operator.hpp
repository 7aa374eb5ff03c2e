// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// U^(1)(f) = U_3(f) and U^(0)(f) = U_3(A f), acting on Q[x] localized at powers of 1+9x.

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "cforge/locring/localized.hpp"
#include "cforge/locring/qpoly.hpp"

namespace cforge {

/// The fundamental relations (keys (l, 0), 0 <= l <= 2) plus the 18-entry initial
/// table U^(i)(x^m/(1+9x)^n), 1 <= m, n <= 3, derived from them algebraically.
std::map<std::pair<std::int64_t, std::int64_t>, LocalizedElement> base_relations(int i);

/// U^(i)(x^m / (1+9x)^n), m, n >= 0, by the modular-equation recurrences. Memoized and thread-safe.
LocalizedElement apply_u_monomial(int i, std::int64_t m, std::int64_t n);

/// U^(i)(z^r) as a Laurent polynomial in z = 1 + 9x, for any integer r. Memoized.
QPoly apply_u_z_power(int i, std::int64_t r);

/// U^(i)(f) by rewriting f as a Laurent polynomial in z and applying apply_u_z_power termwise.
LocalizedElement apply_u(int i, const LocalizedElement& f);

/// U^(i)(f) by linearity over apply_u_monomial; the independent route used to cross-check apply_u.
LocalizedElement apply_u_by_monomials(int i, const LocalizedElement& f);

}  // namespace cforge
