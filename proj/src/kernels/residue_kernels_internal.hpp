// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "cforge/kernels/residue_kernels.hpp"

namespace cforge::kernels::detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint32_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return a >= b ? a - b : a + (m - b);
}

#if defined(CFORGE_HAVE_AVX2_TU)
const ResidueKernels& avx2_table();
#endif

}  // namespace cforge::kernels::detail
