// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "cforge/series/eta.hpp"
#include "cforge/series/int_poly.hpp"
#include "cforge/series/qseries.hpp"

namespace cforge {
namespace {

IntVec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Partitions of n into parts <= k, by the textbook recursion.
Int partitions_bounded(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions_bounded(n - k, k) + partitions_bounded(n, k - 1);
}

// (q^2;q^2)^2 / (q;q)^7 expanded factor by factor with plain loops.
IntVec d2_oracle(std::size_t T) {
  IntVec f(T);
  f[0] = 1;
  for (std::size_t k = 1; k < T; ++k) {
    for (int rep = 0; rep < 7; ++rep)  // multiply by 1/(1-q^k)
      for (std::size_t i = k; i < T; ++i) f[i] += f[i - k];
  }
  for (std::size_t k = 2; k < T; k += 2)
    for (int rep = 0; rep < 2; ++rep)  // multiply by (1-q^k)
      for (std::size_t i = T; i-- > k;) f[i] -= f[i - k];
  return f;
}

TEST(IntPoly, KaratsubaMatchesSchoolbook) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0, 1, 2, 5, 23, 24, 25, 47, 100, 257})
    for (std::size_t m : {0, 1, 3, 24, 31, 130}) {
      const IntVec a = random_vec(rng, n), b = random_vec(rng, m);
      EXPECT_EQ(multiply(a, b), multiply_schoolbook(a, b)) << n << "x" << m;
      IntVec full = multiply_schoolbook(a, b);
      const std::size_t cut = full.size() / 2;
      full.resize(cut);
      EXPECT_EQ(multiply_truncated(a, b, cut), full);
    }
}

TEST(Dk, PartitionNumbersForKZero) {
  const IntVec d0 = dk_coefficients(0, 40);
  for (int n = 0; n < 40; ++n) EXPECT_EQ(d0[static_cast<std::size_t>(n)], partitions_bounded(n, n)) << n;
  EXPECT_EQ(d0[4], 5);
}

TEST(Dk, TwoElongatedAgainstFactorwiseExpansion) {
  const IntVec d2 = dk_coefficients(2, 400);
  EXPECT_EQ(d2, d2_oracle(400));
  EXPECT_EQ(d2[0], 1);
  EXPECT_EQ(d2[2], 33);
}

TEST(Dk, NonnegativeIntegers) {
  for (int k = 0; k <= 3; ++k) {
    const QSeries s = dk_series(k, 200);
    ASSERT_TRUE(s.is_integral());
    for (std::int64_t n = 0; n < 200; ++n) EXPECT_GE(s.coeff(n), 0) << "k=" << k << " n=" << n;
  }
}

TEST(QSeries, PrecisionPropagation) {
  const QSeries a = QSeries::from_integers(-2, {1, 2, 3}, 5);   // known below q^5
  const QSeries b = QSeries::from_integers(1, {4, 5}, 10);      // known below q^10
  const QSeries p = a * b;
  EXPECT_EQ(p.precision(), std::min<std::int64_t>(5 + 1, 10 - 2));
  EXPECT_EQ(p.coeff(-1), 4);
  EXPECT_EQ(p.coeff(0), 5 + 8);
  EXPECT_EQ((a + b).precision(), 5);
  EXPECT_THROW(a.coeff(5), SeriesError);
  EXPECT_EQ(a.coeff(3), 0);
}

TEST(QSeries, U3ExtractsEveryThirdCoefficient) {
  const QSeries f = QSeries::from_integers(-4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 8);
  const QSeries g = f.u3();
  EXPECT_EQ(g.valuation(), -1);  // q^-3 has coefficient 2
  EXPECT_EQ(g.precision(), 3);   // ceil(8/3)
  EXPECT_EQ(g.coeff(-1), 2);
  EXPECT_EQ(g.coeff(0), 5);
  EXPECT_EQ(g.coeff(1), 8);
  EXPECT_EQ(g.coeff(2), 0);
}

TEST(Eta, QuotientTimesInverseIsOne) {
  for (const EtaQuotient& q : {eta_library::x(), eta_library::z(), eta_library::A()}) {
    EtaQuotient inv = q.pow(-1);
    const QSeries prod = eta_quotient_series(q, 150) * eta_quotient_series(inv, 150);
    EXPECT_FALSE(prod.first_difference(QSeries::constant(Rat(1), prod.precision())).has_value()) << q.to_string();
  }
}

TEST(Eta, ZIsOnePlusNineX) {
  const QSeries x = eta_quotient_series(eta_library::x(), 300), z = eta_quotient_series(eta_library::z(), 300);
  EXPECT_FALSE(z.first_difference(QSeries::constant(Rat(1), 300) + x.scaled(Rat(9))).has_value());
  for (std::int64_t n = 1; n < 300; ++n) EXPECT_EQ(mod_floor(z.coeff(n).get_num(), Int(9)), 0) << n;
}

TEST(Eta, FractionalPrefactorRejected) {
  EXPECT_THROW(eta_quotient_series(EtaQuotient{1, {{1, 1}}, 1}, 10), SeriesError);
}

}  // namespace
}  // namespace cforge
