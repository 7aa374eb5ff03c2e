// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "cforge/locring/exponents.hpp"
#include "cforge/locring/h_array.hpp"
#include "cforge/locring/localized.hpp"
#include "cforge/locring/modular_equations.hpp"
#include "cforge/locring/qpoly.hpp"
#include "cforge/locring/u_operator.hpp"
#include "cforge/locring/v_sets.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {
namespace {

// Floor of a/4 by stepping, kept apart from the library's floor_div.
std::int64_t quarter_floor(std::int64_t a) {
  std::int64_t k = 0;
  while (4 * k > a) --k;
  while (4 * (k + 1) <= a) ++k;
  return k;
}

std::int64_t theta_oracle(std::int64_t m) {
  if (m >= 7) return quarter_floor(3 * m - 3) - 1;
  return m >= 4 ? 2 : 0;
}
std::int64_t pi0_oracle(std::int64_t m, std::int64_t r) {
  const std::int64_t v = quarter_floor(3 * r - m) - 1;
  return v > 0 ? v : 0;
}
std::int64_t pi1_oracle(std::int64_t m, std::int64_t r) {
  if (m >= 4) return quarter_floor(3 * r - m + 1);
  return r == 1 ? 0 : quarter_floor(3 * r + 1);
}
std::int64_t phi_oracle(std::int64_t l) { return l == 0 ? 1 : quarter_floor(3 * l + 12); }

TEST(Exponents, MatchIndependentImplementation) {
  for (std::int64_t m = 1; m <= 200; ++m) {
    EXPECT_EQ(exponents::theta(m), theta_oracle(m)) << m;
    for (std::int64_t r = 1; r <= 200; ++r) {
      ASSERT_EQ(exponents::pi0(m, r), pi0_oracle(m, r)) << m << "," << r;
      ASSERT_EQ(exponents::pi1(m, r), pi1_oracle(m, r)) << m << "," << r;
    }
  }
  for (std::int64_t l = 0; l <= 200; ++l) EXPECT_EQ(exponents::phi(l), phi_oracle(l));
}

TEST(Exponents, FamilyParameters) {
  EXPECT_EQ(exponents::psi(1), 1);
  EXPECT_EQ(exponents::psi(2), 3);
  EXPECT_EQ(exponents::psi(3), 10);
  EXPECT_EQ(exponents::beta(1), 1);
  EXPECT_EQ(exponents::beta(2), 3);
  EXPECT_EQ(exponents::lambda(1), 2);
  EXPECT_EQ(exponents::lambda(2), 8);
  for (std::int64_t a = 1; a <= 12; ++a) {
    const std::int64_t p = pow3(static_cast<unsigned long>(a)).get_si();
    EXPECT_EQ((8 * exponents::lambda(a)) % p, 1) << a;
  }
}

TEST(Exponents, TablesAgreeWithOracle) {
  const auto t0 = exponents::theta_pi0_table();
  const auto t1 = exponents::theta_pi1_table();
  EXPECT_EQ(t0, exponents::printed_theta_pi0_table());
  EXPECT_EQ(t1, exponents::printed_theta_pi1_table());
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const auto m = static_cast<std::int64_t>(a + 1), r = static_cast<std::int64_t>(b + 1);
      if (t0[a][b]) EXPECT_EQ(*t0[a][b], theta_oracle(m) + pi0_oracle(m, r) - theta_oracle(r));
      if (t1[a][b]) EXPECT_EQ(*t1[a][b], theta_oracle(m) + pi1_oracle(m, r) - theta_oracle(r) - 2);
    }
}

TEST(Exponents, InequalityCheckPassesOnSmallGrid) { EXPECT_TRUE(exponents::check_exponent_lemmas(20, 20, 12).passed()); }

TEST(QPoly, ArithmeticAndAffineComposition) {
  const QPoly p = QPoly::from_integers({Int(1), Int(2), Int(3)});
  const QPoly q = QPoly::from_integers({Int(-1), Int(1)});
  EXPECT_EQ(p * q, QPoly::from_integers({Int(-1), Int(-1), Int(-1), Int(3)}));
  EXPECT_EQ((p + q) - q, p);
  // p(9t + 1) at t = 0 is p(1) = 6.
  EXPECT_EQ(p.compose_affine(Rat(9), Rat(1)).coeff(0), 6);
  QPoly quo;
  EXPECT_TRUE(one_plus_9x_pow(3).divide_by_linear(Int(9), quo));
  EXPECT_EQ(quo, one_plus_9x_pow(2));
  EXPECT_FALSE(p.divide_by_linear(Int(9), quo));
}

TEST(Localized, DenominatorHandling) {
  const LocalizedElement e(one_plus_9x_pow(2) * QPoly::monomial(Rat(1), 1), 3);
  EXPECT_EQ(e.normalized().denom_pow(), 1);
  EXPECT_EQ(e, LocalizedElement::x_power(1, 1));
  EXPECT_EQ(LocalizedElement::x_power(1, 1).with_denom_pow(4).numerator(), one_plus_9x_pow(3) * QPoly::monomial(Rat(1), 1));
  EXPECT_THROW(LocalizedElement::x_power(1, 2).with_denom_pow(1), std::domain_error);
  const LocalizedElement f = LocalizedElement::x_power(2, 3);
  EXPECT_EQ(LocalizedElement::from_z_laurent(f.to_z_laurent()), f);
}

TEST(ModularEquations, ZFormIsScaledXForm) {
  modeq::BiPoly scaled = modeq::mod_x_in_z();
  for (auto& row : scaled.rows)
    for (auto& c : row) c *= 729;
  EXPECT_EQ(scaled, modeq::mod_z_polynomial());
}

// Series-side U_3(A^{1-i} x^m / z^n), built without the localized machinery.
QSeries series_side(int i, std::int64_t m, std::int64_t n, std::int64_t T) {
  const std::int64_t P = 3 * T;
  QSeries f = QSeries::constant(Rat(1), P);
  const QSeries x = eta_quotient_series(eta_library::x(), P);
  const QSeries zinv = eta_quotient_series(eta_library::z().pow(-1), P);
  for (std::int64_t k = 0; k < m; ++k) f = f * x;
  for (std::int64_t k = 0; k < n; ++k) f = f * zinv;
  if (i == 0) f = f * eta_quotient_series(eta_library::A(), P);
  return f.u3().truncated(T);
}

TEST(UOperator, RecurrenceMatchesSeries) {
  const std::int64_t T = 60;
  const QSeries x = eta_quotient_series(eta_library::x(), T);
  for (int i = 0; i <= 1; ++i)
    for (std::int64_t m = 0; m <= 5; ++m)
      for (std::int64_t n = 0; n <= 5; ++n) {
        const QSeries lhs = apply_u_monomial(i, m, n).to_series(x);
        EXPECT_FALSE(lhs.first_difference(series_side(i, m, n, T)).has_value()) << i << " " << m << " " << n;
      }
}

TEST(UOperator, RoutesAgreeOnRandomElements) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-30, 30), deg(0, 10), den(0, 8);
  for (int t = 0; t < 40; ++t) {
    std::vector<Int> coeffs(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : coeffs) v = c(rng);
    const LocalizedElement f(QPoly::from_integers(coeffs), den(rng));
    for (int i = 0; i <= 1; ++i) EXPECT_EQ(apply_u(i, f), apply_u_by_monomials(i, f)) << f.to_string();
  }
}

TEST(UOperator, BaseRelationsIntegral) {
  for (int i = 0; i <= 1; ++i) {
    const auto base = base_relations(i);
    EXPECT_EQ(base.size(), 12u);
    for (const auto& [key, value] : base) EXPECT_TRUE(value.is_integral()) << key.first << "," << key.second;
  }
}

TEST(HArray, SliceAccessAndShape) {
  const HSlice s = extract_h(1, 4, 2);
  EXPECT_EQ(s.denom_pow, 6);
  EXPECT_EQ(s.r_min, 2);
  EXPECT_THROW(s.at(1), std::out_of_range);
  EXPECT_EQ(s.at(s.r_max() + 5), 0);
  EXPECT_TRUE(check_h_shape(4, 4).passed());
  EXPECT_TRUE(w_expansions().checks.passed());
}

TEST(VSets, MembershipAndReconstruction) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t)
    for (int i = 0; i <= 1; ++i) {
      const VDecomposition d = random_v_element(i, 4, rng);
      const VMembership m = v_membership(d.reconstruct(), i, 4);
      ASSERT_TRUE(m.ok()) << m.diagnosis;
      EXPECT_EQ(m.decomposition->s, d.s);
    }
  EXPECT_FALSE(v_membership(LocalizedElement::x_power(4, 1), 0, 1).ok());  // 3^2 must divide
  EXPECT_FALSE(v_membership(LocalizedElement::x_power(1, 1), 1, 1).ok());  // s(1) = 1 not 0 mod 9
  EXPECT_FALSE(v_membership(LocalizedElement::x_power(1, 2), 0, 1).ok());  // denominator too large
  EXPECT_FALSE(v_membership(LocalizedElement::x_power(0, 1), 0, 1).ok());  // constant term
  EXPECT_TRUE(v_membership(LocalizedElement::x_power(1, 1).scaled(Rat(9)), 1, 1).ok());
}

TEST(VSets, CompositeFormSpotValues) {
  const ThatForms f = that_vectors();
  EXPECT_EQ(f.that[0][5], 1);          // s(6) in that(1)
  EXPECT_EQ(f.that[1][3], 24003457);   // s(4) in that(2)
  EXPECT_EQ(f.sum[0], 17268);          // s(1) in the sum
  EXPECT_EQ(f.sum[1], 2839074);
}

}  // namespace
}  // namespace cforge
