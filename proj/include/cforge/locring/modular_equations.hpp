// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Modular-equation coefficients for the Hauptmoduln x and z = 1 + 9x of X_0(6),
// and the six fundamental relations U^(i)(x^l), 0 <= l <= 2.

#pragma once

#include <cstdint>

#include "cforge/locring/localized.hpp"
#include "cforge/locring/qpoly.hpp"

namespace cforge::modeq {

/// a_j as a polynomial in x, j = 0, 1, 2.
QPoly a(int j);
/// b_k as a polynomial in z, k = 0..3.
QPoly b(int k);
/// b_k(1 + 9x) as a polynomial in x.
QPoly b_in_x(int k);

/// Bivariate polynomial sum c_{p,q} u^p v^q, stored dense as rows[p][q].
struct BiPoly {
  std::vector<std::vector<Rat>> rows;
  Rat coeff(std::size_t p, std::size_t q) const;
  friend bool operator==(const BiPoly& l, const BiPoly& r);
};

/// x^3 + sum_j a_j(X) x^j with u = x, v = X.
BiPoly mod_x_polynomial();
/// sum_k b_k(Z) z^k with u = z, v = Z.
BiPoly mod_z_polynomial();
/// mod_x_polynomial with x = (z-1)/9, X = (Z-1)/9 substituted, in u = z, v = Z.
BiPoly mod_x_in_z();

}  // namespace cforge::modeq

namespace cforge {

/// U^(i)(x^l) for 0 <= l <= 2 as printed; throws std::out_of_range otherwise.
LocalizedElement fundamental_relation(int i, int l);

}  // namespace cforge
