// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/kernels/residue_kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string_view>

#include "residue_kernels_internal.hpp"

namespace cforge::kernels {

std::vector<PentagonalTerm> pentagonal_terms(std::size_t limit) {
  std::vector<PentagonalTerm> terms;
  for (std::size_t k = 1;; ++k) {
    const std::size_t a = k * (3 * k - 1) / 2;
    const std::size_t b = k * (3 * k + 1) / 2;
    if (a >= limit) break;
    const bool negative = (k % 2) == 1;
    terms.push_back({a, negative});
    if (b < limit) terms.push_back({b, negative});
  }
  return terms;
}

namespace {

using detail::add_mod;
using detail::sub_mod;

void scalar_add_assign(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t m) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = add_mod(dst[i], src[i], m);
}

void scalar_sub_assign(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t m) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = sub_mod(dst[i], src[i], m);
}

void scalar_mul_euler(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t stride,
                      std::uint32_t m) {
  std::memcpy(dst, src, n * sizeof(std::uint32_t));
  for (const PentagonalTerm& t : pentagonal_terms((n + stride - 1) / stride)) {
    const std::size_t shift = t.offset * stride;
    if (shift >= n) continue;
    if (t.negative)
      scalar_sub_assign(dst + shift, src, n - shift, m);
    else
      scalar_add_assign(dst + shift, src, n - shift, m);
  }
}

// f_new[i] = g[i] - sum_k (-1)^k f_new[i - stride*p_k]; terms with negative sign are added back.
void scalar_div_euler(std::uint32_t* f, std::size_t n, std::uint32_t stride, std::uint32_t m) {
  const auto terms = pentagonal_terms((n + stride - 1) / stride);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t acc = f[i];
    for (const PentagonalTerm& t : terms) {
      const std::size_t shift = t.offset * stride;
      if (shift > i) break;
      acc = t.negative ? add_mod(acc, f[i - shift], m) : sub_mod(acc, f[i - shift], m);
    }
    f[i] = acc;
  }
}

const ResidueKernels kScalar{"scalar", scalar_add_assign, scalar_sub_assign, scalar_mul_euler, scalar_div_euler};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace

const ResidueKernels& scalar_kernels() { return kScalar; }

const ResidueKernels* avx2_kernels() {
#if defined(CFORGE_HAVE_AVX2_TU)
  if (cpu_has_avx2()) return &detail::avx2_table();
#endif
  return nullptr;
}

const ResidueKernels& best_kernels() {
  if (const char* forced = std::getenv("CONGRUENCE_FORGE_SIMD"); forced != nullptr && std::string_view(forced) == "scalar")
    return kScalar;
  if (const ResidueKernels* k = avx2_kernels()) return *k;
  return kScalar;
}

}  // namespace cforge::kernels
