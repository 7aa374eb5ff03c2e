// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "cforge/kernels/residue_kernels.hpp"
#include "cforge/series/eta.hpp"

namespace cforge::kernels {
namespace {

std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t n, std::uint32_t m) {
  std::uniform_int_distribution<std::uint32_t> d(0, m - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

const std::vector<std::uint32_t> kModuli{2, 3, 9, 2187, 65537, 1000003, 1162261467U, kMaxModulus};
const std::vector<std::size_t> kLengths{0, 1, 7, 8, 9, 31, 64, 333, 1025};

TEST(Pentagonal, MatchesDefinition) {
  const auto terms = pentagonal_terms(200);
  std::vector<std::pair<std::size_t, bool>> expected;
  for (long k = 1;; ++k) {
    const long a = k * (3 * k - 1) / 2, b = k * (3 * k + 1) / 2;
    if (a >= 200) break;
    expected.emplace_back(a, k % 2 == 1);
    if (b < 200) expected.emplace_back(b, k % 2 == 1);
  }
  ASSERT_EQ(terms.size(), expected.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    EXPECT_EQ(terms[i].offset, expected[i].first);
    EXPECT_EQ(terms[i].negative, expected[i].second);
  }
}

TEST(ScalarKernels, EulerRoundTrip) {
  std::mt19937_64 rng(5);
  const auto& k = scalar_kernels();
  for (std::uint32_t m : kModuli)
    for (std::size_t n : kLengths) {
      auto f = random_residues(rng, n, m);
      std::vector<std::uint32_t> g(n);
      k.mul_euler(g.data(), f.data(), n, 2, m);
      k.div_euler(g.data(), n, 2, m);
      EXPECT_EQ(g, f) << "m=" << m << " n=" << n;
    }
}

TEST(Avx2Kernels, BitIdenticalToScalar) {
  const ResidueKernels* v = avx2_kernels();
  if (v == nullptr) GTEST_SKIP() << "no AVX2 on this machine";
  const auto& s = scalar_kernels();
  std::mt19937_64 rng(11);
  for (std::uint32_t m : kModuli)
    for (std::size_t n : kLengths)
      for (std::uint32_t stride : {1U, 2U, 3U, 9U}) {
        const auto a = random_residues(rng, n, m), b = random_residues(rng, n, m);
        auto x1 = a, x2 = a;
        s.add_assign(x1.data(), b.data(), n, m);
        v->add_assign(x2.data(), b.data(), n, m);
        EXPECT_EQ(x1, x2) << "add m=" << m << " n=" << n;
        x1 = a;
        x2 = a;
        s.sub_assign(x1.data(), b.data(), n, m);
        v->sub_assign(x2.data(), b.data(), n, m);
        EXPECT_EQ(x1, x2) << "sub m=" << m << " n=" << n;
        std::vector<std::uint32_t> y1(n), y2(n);
        s.mul_euler(y1.data(), a.data(), n, stride, m);
        v->mul_euler(y2.data(), a.data(), n, stride, m);
        EXPECT_EQ(y1, y2) << "mul_euler m=" << m << " n=" << n << " stride=" << stride;
        x1 = a;
        x2 = a;
        s.div_euler(x1.data(), n, stride, m);
        v->div_euler(x2.data(), n, stride, m);
        EXPECT_EQ(x1, x2) << "div_euler m=" << m << " n=" << n << " stride=" << stride;
      }
}

TEST(KernelSelection, EnvironmentForcesScalar) {
  ::setenv("CONGRUENCE_FORGE_SIMD", "scalar", 1);
  EXPECT_EQ(best_kernels().name, "scalar");
  const auto forced = dk_residues(2, 3000, 1162261467U);
  ::unsetenv("CONGRUENCE_FORGE_SIMD");
  if (avx2_kernels() != nullptr) EXPECT_EQ(best_kernels().name, avx2_kernels()->name);
  EXPECT_EQ(dk_residues(2, 3000, 1162261467U), forced);
}

TEST(DkResidues, AgreeWithExactCoefficients) {
  const IntVec exact = dk_coefficients(2, 2000);
  for (std::uint32_t m : {9U, 2187U, 1162261467U}) {
    const auto r = dk_residues(2, 2000, m);
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const Int e = mod_floor(exact[i], Int(static_cast<unsigned long>(m)));
      ASSERT_EQ(e.get_ui(), r[i]) << "n=" << i << " m=" << m;
    }
  }
}

}  // namespace
}  // namespace cforge::kernels
