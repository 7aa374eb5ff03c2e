// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>

#include "cforge/engine/congruence.hpp"
#include "cforge/engine/cusp_checks.hpp"
#include "cforge/engine/l_series.hpp"
#include "cforge/engine/parameters.hpp"
#include "cforge/engine/properties.hpp"
#include "cforge/engine/relations.hpp"
#include "cforge/engine/stability.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {
namespace {

TEST(Parameters, MinimalLambdaAndValidation) {
  const std::int64_t expected[] = {2, 8, 17, 71, 152, 638};
  for (std::int64_t a = 1; a <= 6; ++a) {
    const auto p = CongruenceParameters::for_alpha(a);
    EXPECT_EQ(p.lambda, expected[a - 1]);
    EXPECT_TRUE(p.validate().passed()) << a;
  }
}

TEST(LSeries, DirectAndIterativeAgree) {
  for (std::int64_t a = 0; a <= 3; ++a)
    EXPECT_FALSE(l_series_direct(a, 60).first_difference(l_series_iterative(a, 60)).has_value()) << a;
  const QSeries l1 = l_series(1, 10);
  EXPECT_EQ(l1.valuation(), 1);
  EXPECT_EQ(l1.coeff(1), 33);
}

TEST(LSeries, OracleSiftOfD2) {
  // L_1 / ((q^3;q^3)^7 (q^6;q^6)^-2) = sum d_2(3n+2) q^{n+1}.
  const std::int64_t T = 40;
  const QSeries pre = euler_power_series(3, 7, T) * euler_power_series(6, -2, T);
  const QSeries sifted = l_series_direct(1, T) * pre.inverse();
  const IntVec d = dk_coefficients(2, 3 * T + 3);
  for (std::int64_t n = 0; n + 1 < T; ++n) EXPECT_EQ(sifted.coeff(n + 1), d[static_cast<std::size_t>(3 * n + 2)]) << n;
}

TEST(Congruence, SmallRangePasses) {
  const VerificationReport r = check_congruence_direct(3, 20);
  EXPECT_TRUE(r.passed) << r.to_text();
  EXPECT_EQ(r.rows.size(), 3u);
}

TEST(Relations, AllPipelinesPass) {
  for (const VerificationReport& r : {verify_l1_representation(120), verify_fundamental_relations(80),
                                      verify_initial_relations(60), verify_modular_equations(120),
                                      verify_u3_contract(60), verify_cusp_orders(), verify_radu_bounds()})
    EXPECT_TRUE(r.passed) << r.to_text();
}

TEST(Relations, PolynomialRecoveryRejectsNonPolynomials) {
  const QSeries x = eta_quotient_series(eta_library::x(), 50);
  const QSeries zinv = eta_quotient_series(eta_library::z().pow(-1), 50);
  EXPECT_FALSE(x_polynomial_from_series(zinv, x, 10).has_value());
  const auto p = x_polynomial_from_series(x * x + x.scaled(Rat(3)), x, 10);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, QPoly::from_integers({Int(0), Int(3), Int(1)}));
}

TEST(Stability, RefusesTooFewTerms) {
  const VerificationReport r = stability_iteration(2, 5);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.counterexamples.empty());
  EXPECT_EQ(r.counterexamples.front().front().second, "precision");
}

TEST(Stability, FirstThreeLevels) {
  const VerificationReport r = stability_iteration(3);
  EXPECT_TRUE(r.passed) << r.to_text();
}

TEST(Reports, DeterministicModuloElapsed) {
  EXPECT_TRUE(verify_fundamental_relations(50).same_content(verify_fundamental_relations(50)));
  EXPECT_TRUE(property_u0_stability(99, 15).same_content(property_u0_stability(99, 15)));
  EXPECT_TRUE(property_degree_zero(4, 10).same_content(property_degree_zero(4, 10)));
}

TEST(Properties, SmallSuitesPass) {
  for (const VerificationReport& r :
       {property_series_ring(1, 30), property_u3(1, 30), property_order_additivity(1, 30), property_degree_zero(1, 20),
        property_u0_stability(1, 20), property_u1_stability(1, 20), property_composite_stability(1, 10)})
    EXPECT_TRUE(r.passed) << r.to_text();
}

TEST(Properties, ThreadCountFromEnvironment) {
  ::setenv("CONGRUENCE_FORGE_THREADS", "3", 1);
  EXPECT_EQ(worker_threads(), 3u);
  const VerificationReport threaded = property_u1_stability(5, 12);
  ::setenv("CONGRUENCE_FORGE_THREADS", "1", 1);
  EXPECT_EQ(worker_threads(), 1u);
  EXPECT_TRUE(threaded.same_content(property_u1_stability(5, 12)));
  ::setenv("CONGRUENCE_FORGE_THREADS", "zero", 1);
  EXPECT_GE(worker_threads(), 1u);
  ::unsetenv("CONGRUENCE_FORGE_THREADS");
}

}  // namespace
}  // namespace cforge
