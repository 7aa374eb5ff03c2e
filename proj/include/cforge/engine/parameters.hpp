// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cforge/check_result.hpp"

namespace cforge {

/// The data attached to level alpha of the congruence family.
struct CongruenceParameters {
  std::int64_t alpha = 1;
  std::int64_t lambda = 0;
  std::int64_t psi = 0;
  std::int64_t beta = 0;

  static CongruenceParameters for_alpha(std::int64_t alpha);

  /// 8*lambda = 1 (mod 3^alpha) with lambda minimal positive (by search), and the psi
  /// recursions 3 psi(2a-1) = psi(2a), 3 psi(2a) + 1 = psi(2a+1) at this alpha.
  CheckResult validate() const;
};

}  // namespace cforge
