// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cforge/cusp/cusp.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {
namespace {

std::int64_t gamma0_index(std::int64_t N) {
  Rat idx(static_cast<long>(N));
  std::int64_t n = N;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      idx *= make_rat(Int(p + 1), Int(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) idx *= make_rat(Int(n + 1), Int(n));
  return idx.get_num().get_si();
}

// Ligozat's formula written out directly for an eta quotient at its own level.
Rat ligozat_oracle(const std::map<std::int64_t, std::int64_t>& r, std::int64_t N, std::int64_t c) {
  Rat sum = 0;
  for (const auto& [delta, e] : r) {
    const std::int64_t g = std::gcd(c, delta);
    sum += make_rat(Int(e * g * g), Int(delta));
  }
  return sum * make_rat(Int(N), Int(24 * std::gcd(c * c, N)));
}

TEST(Cusps, CountAndWidths) {
  for (std::int64_t N = 1; N <= 120; ++N) {
    const auto cusps = cusps_of(N);
    EXPECT_EQ(static_cast<std::int64_t>(cusps.size()), cusp_count_formula(N)) << N;
    std::int64_t width = 0;
    for (const Cusp& c : cusps) width += cusp_width(c, N);
    EXPECT_EQ(width, gamma0_index(N)) << N;
    EXPECT_TRUE(cusps.front().is_infinity());
  }
}

TEST(Cusps, RepresentativesAreDistinctAndExhaustive) {
  std::mt19937_64 rng(7);
  for (std::int64_t N : {6, 18, 27, 36, 50}) {
    const auto cusps = cusps_of(N);
    for (std::size_t i = 0; i < cusps.size(); ++i)
      for (std::size_t j = 0; j < cusps.size(); ++j)
        EXPECT_EQ(cusp_equivalent(cusps[i], cusps[j], N), i == j) << N;
    std::uniform_int_distribution<std::int64_t> d(-200, 200), cd(1, 300);
    for (int t = 0; t < 200; ++t) {
      std::int64_t a = d(rng), c = cd(rng);
      if (std::gcd(a, c) != 1) continue;
      int hits = 0;
      for (const Cusp& rep : cusps) hits += cusp_equivalent(Cusp{a, c}, rep, N) ? 1 : 0;
      EXPECT_EQ(hits, 1) << a << "/" << c << " on " << N;
    }
  }
}

TEST(Cusps, Parse) {
  EXPECT_TRUE(Cusp::parse("inf").is_infinity());
  EXPECT_TRUE(Cusp::parse("oo").is_infinity());
  EXPECT_EQ(Cusp::parse("2/6"), (Cusp{1, 3}));
  EXPECT_EQ(Cusp::parse("0"), (Cusp{0, 1}));
  EXPECT_THROW(Cusp::parse("a/b"), std::invalid_argument);
}

TEST(Ligozat, MatchesDirectFormula) {
  for (const EtaQuotient& q : {eta_library::x(), eta_library::z()})
    for (const Cusp& c : cusps_of(6))
      EXPECT_EQ(ligozat_order(q, c), ligozat_oracle(q.exponents, 6, c.c)) << q.to_string() << " " << c.to_string();
  const EtaQuotient a = eta_library::A();
  for (const Cusp& c : cusps_of(18)) EXPECT_EQ(ligozat_order(a, c), ligozat_oracle(a.exponents, 18, c.c));
}

TEST(Ligozat, XOnLevelSix) {
  const CuspOrderTable t = order_table(eta_library::x(), 6);
  EXPECT_EQ(t.at(Cusp::infinity()), 1);
  EXPECT_EQ(t.at(Cusp{0, 1}), -1);
  EXPECT_EQ(t.at(Cusp{1, 2}), 0);
  EXPECT_EQ(t.at(Cusp{1, 3}), 0);
  EXPECT_EQ(t.degree(), 0);
}

TEST(Newman, LibraryQuotientsAreModular) {
  EXPECT_TRUE(newman_is_modular(eta_library::A()).modular());
  EXPECT_TRUE(newman_is_modular(eta_library::x()).modular());
  EXPECT_TRUE(newman_is_modular(eta_library::z()).modular());
  const NewmanBreakdown b = newman_is_modular(EtaQuotient{6, {{1, 1}, {2, -1}}, 1});
  EXPECT_FALSE(b.modular());
}

TEST(SinglePole, ShiftedFundamentalFactors) {
  EtaQuotient x3 = eta_library::x();
  x3.scale = 3;
  EtaQuotient z3 = eta_library::z();
  z3.scale = 3;
  for (int l = 0; l <= 2; ++l) {
    EXPECT_TRUE(certify_single_pole({{x3, -11}, {eta_library::x(), l}}, Cusp::infinity(), 18).single_pole);
    EXPECT_TRUE(certify_single_pole({{eta_library::A(), 1}, {x3, -11}, {z3, 1}, {eta_library::x(), l}},
                                    Cusp::infinity(), 18)
                    .single_pole);
  }
  // Without the shift the pole at 0 survives.
  EXPECT_FALSE(certify_single_pole({{eta_library::x(), 1}}, Cusp::infinity(), 18).single_pole);
}

TEST(Radu, LOneBoundsOnLevelSix) {
  const std::map<std::int64_t, std::int64_t> gen{{1, -7}, {2, 2}}, pre{{3, 7}, {6, -2}};
  EXPECT_EQ(radu_lower_bound(gen, 3, 2, pre, Cusp::infinity(), 6), Rat(1, 3));
  EXPECT_EQ(radu_lower_bound(gen, 3, 2, pre, Cusp{1, 3}, 6), Rat(4, 3));
  EXPECT_EQ(radu_lower_bound(gen, 3, 2, pre, Cusp{1, 2}, 6), -1);
  EXPECT_EQ(radu_lower_bound(gen, 3, 2, pre, Cusp{0, 1}, 6), -4);
}

}  // namespace
}  // namespace cforge
