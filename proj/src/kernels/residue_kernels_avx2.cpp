// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstring>

#include "residue_kernels_internal.hpp"

namespace cforge::kernels::detail {
namespace {

constexpr std::size_t kLanes = 8;

// a, b < m < 2^31: the wrapped difference s - m exceeds s exactly when s < m.
inline __m256i add_mod_v(__m256i a, __m256i b, __m256i m) {
  const __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, m));
}

inline __m256i sub_mod_v(__m256i a, __m256i b, __m256i m) {
  const __m256i d = _mm256_sub_epi32(a, b);
  return _mm256_min_epu32(d, _mm256_add_epi32(d, m));
}

inline __m256i load(const std::uint32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(std::uint32_t* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void avx2_add_assign(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t modulus) {
  const __m256i m = _mm256_set1_epi32(static_cast<int>(modulus));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst + i, add_mod_v(load(dst + i), load(src + i), m));
  for (; i < n; ++i) dst[i] = add_mod(dst[i], src[i], modulus);
}

void avx2_sub_assign(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t modulus) {
  const __m256i m = _mm256_set1_epi32(static_cast<int>(modulus));
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(dst + i, sub_mod_v(load(dst + i), load(src + i), m));
  for (; i < n; ++i) dst[i] = sub_mod(dst[i], src[i], modulus);
}

void avx2_mul_euler(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t stride,
                    std::uint32_t modulus) {
  std::memcpy(dst, src, n * sizeof(std::uint32_t));
  for (const PentagonalTerm& t : pentagonal_terms((n + stride - 1) / stride)) {
    const std::size_t shift = t.offset * stride;
    if (shift >= n) continue;
    if (t.negative)
      avx2_sub_assign(dst + shift, src, n - shift, modulus);
    else
      avx2_add_assign(dst + shift, src, n - shift, modulus);
  }
}

// Blocks of eight outputs: pentagonal shifts >= 8 only read finished blocks and are
// applied as whole vectors; shorter shifts (and the one block a shift straddles) are
// resolved lane by lane afterwards.
void avx2_div_euler(std::uint32_t* f, std::size_t n, std::uint32_t stride, std::uint32_t modulus) {
  const auto terms = pentagonal_terms((n + stride - 1) / stride);
  const __m256i m = _mm256_set1_epi32(static_cast<int>(modulus));

  std::size_t i0 = 0;
  for (; i0 + kLanes <= n; i0 += kLanes) {
    __m256i acc = load(f + i0);
    alignas(32) std::uint32_t lane[kLanes];
    // Shifts that straddle this block, applied per lane below.
    std::size_t straddle_begin = terms.size();
    std::size_t straddle_end = terms.size();
    std::size_t small_end = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::size_t shift = terms[k].offset * stride;
      if (shift < kLanes) {
        small_end = k + 1;
        continue;
      }
      if (shift <= i0) {
        const __m256i prev = load(f + i0 - shift);
        acc = terms[k].negative ? add_mod_v(acc, prev, m) : sub_mod_v(acc, prev, m);
        continue;
      }
      if (shift < i0 + kLanes) {
        if (straddle_begin == terms.size()) straddle_begin = k;
        straddle_end = k + 1;
        continue;
      }
      break;
    }
    store(lane, acc);
    for (std::size_t j = 0; j < kLanes; ++j) {
      const std::size_t i = i0 + j;
      std::uint32_t v = lane[j];
      for (std::size_t k = straddle_begin; k < straddle_end; ++k) {
        const std::size_t shift = terms[k].offset * stride;
        if (shift > i) continue;
        v = terms[k].negative ? add_mod(v, f[i - shift], modulus) : sub_mod(v, f[i - shift], modulus);
      }
      for (std::size_t k = 0; k < small_end; ++k) {
        const std::size_t shift = terms[k].offset * stride;
        if (shift > i) break;
        const std::uint32_t prev = shift > j ? f[i - shift] : lane[j - shift];
        v = terms[k].negative ? add_mod(v, prev, modulus) : sub_mod(v, prev, modulus);
      }
      lane[j] = v;
    }
    std::memcpy(f + i0, lane, sizeof(lane));
  }
  for (std::size_t i = i0; i < n; ++i) {
    std::uint32_t acc = f[i];
    for (const PentagonalTerm& t : terms) {
      const std::size_t shift = t.offset * stride;
      if (shift > i) break;
      acc = t.negative ? add_mod(acc, f[i - shift], modulus) : sub_mod(acc, f[i - shift], modulus);
    }
    f[i] = acc;
  }
}

const ResidueKernels kAvx2{"avx2", avx2_add_assign, avx2_sub_assign, avx2_mul_euler, avx2_div_euler};

}  // namespace

const ResidueKernels& avx2_table() { return kAvx2; }

}  // namespace cforge::kernels::detail
