// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// The stability sets V^(i)_n = { (1+9x)^{-n} sum_{m>=1} s(m) 3^{theta(m)} x^m } with integer s,
// plus s(1) + s(2) + s(3) = 0 (mod 9) when i = 1.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cforge/check_result.hpp"
#include "cforge/locring/localized.hpp"
#include "cforge/rational.hpp"

namespace cforge {

struct VDecomposition {
  int i = 0;
  std::int64_t n = 0;
  /// Nonzero s(m) only.
  std::map<std::int64_t, Int> s;

  LocalizedElement reconstruct() const;
};

struct VMembership {
  std::optional<VDecomposition> decomposition;
  /// Empty on success; otherwise the first violated condition.
  std::string diagnosis;
  bool ok() const { return decomposition.has_value(); }
};

/// Decides f in V^(i)_n.
VMembership v_membership(const LocalizedElement& f, int i, std::int64_t n);

/// Random element of V^(i)_n: s(m) uniform in [-50, 50] for 1 <= m <= 12, with s(3)
/// shifted so the mod-9 condition holds when i = 1.
VDecomposition random_v_element(int i, std::int64_t n, std::mt19937_64& rng);

/// Coefficient vectors of the composite linear forms in s(1..15); entry m - 1 is the coefficient of s(m).
struct ThatForms {
  std::array<std::vector<Rat>, 3> that;
  std::vector<Rat> sum;
};

/// that(w) = sum_{r=1}^{R_w} sum_{m=1}^{3r} s(m) h_1(m,1,r) h_0(r,3,w) 3^{theta(m)+pi_1(m,r)+pi_0(r,w)-2},
/// R_1 = 2 and R_2 = R_3 = 5.
ThatForms that_vectors();

/// The forms as hard-coded reference values, same layout.
const ThatForms& printed_that_forms();

/// Coefficient-by-coefficient comparison of the computed and printed forms (36 entries plus the
/// 15-entry sum), integrality of each form on s(1)+s(2)+s(3) = 0 (mod 9), and
/// sum = 6 (s(1)+s(2)+s(3)) (mod 9).
CheckResult check_that_forms(const ThatForms& computed);

}  // namespace cforge
