// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Dense residue-series kernels over Z/MZ with M < 2^31.
//
// Residues are stored as uint32 in [0, M). Every kernel has a scalar reference
// implementation; vector variants must produce bit-identical output and are
// selected at runtime by best_kernels().

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cforge::kernels {

inline constexpr std::uint32_t kMaxModulus = 0x7fffffffU;

struct ResidueKernels {
  std::string_view name;

  /// dst[i] = (dst[i] + src[i]) mod M for i < n.
  void (*add_assign)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t modulus);

  /// dst[i] = (dst[i] - src[i]) mod M for i < n.
  void (*sub_assign)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t modulus);

  /// dst = src * (q^stride; q^stride)_inf truncated to n terms. dst and src must not alias.
  void (*mul_euler)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t stride,
                    std::uint32_t modulus);

  /// f = f / (q^stride; q^stride)_inf truncated to n terms, in place.
  void (*div_euler)(std::uint32_t* f, std::size_t n, std::uint32_t stride, std::uint32_t modulus);
};

const ResidueKernels& scalar_kernels();

/// AVX2 variant, or nullptr when the build or the running CPU lacks AVX2.
const ResidueKernels* avx2_kernels();

/// Fastest variant available on this CPU. Setting CONGRUENCE_FORGE_SIMD=scalar forces the reference path.
const ResidueKernels& best_kernels();

/// Generalized pentagonal numbers k(3k-1)/2, k = 1, -1, 2, -2, ... below limit, with the sign (-1)^k.
struct PentagonalTerm {
  std::size_t offset;
  bool negative;
};
std::vector<PentagonalTerm> pentagonal_terms(std::size_t limit);

}  // namespace cforge::kernels
