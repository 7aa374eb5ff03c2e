// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/relations.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cforge/cusp/cusp.hpp"
#include "cforge/engine/l_series.hpp"
#include "cforge/locring/localized.hpp"
#include "cforge/locring/modular_equations.hpp"
#include "cforge/locring/u_operator.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {
namespace {

EtaQuotient scaled(EtaQuotient q, std::int64_t k) {
  q.scale = k;
  return q;
}

std::string relation_name(int i, std::int64_t m, std::int64_t n) {
  std::string arg = m == 0 ? "1" : (m == 1 ? "x" : "x^" + std::to_string(m));
  if (n > 0) arg += "/(1+9x)^" + std::to_string(n);
  return "U" + std::to_string(i) + "(" + arg + ")";
}

Counterexample series_cx(const std::string& what, const std::string& name, std::int64_t exponent) {
  return {{"check", what}, {"relation", name}, {"first_bad_exponent", std::to_string(exponent)}};
}

// Polynomial p evaluated at the series s.
QSeries eval_poly(const QPoly& p, const QSeries& s) { return LocalizedElement(p, 0).to_series(s); }

// L_1 as displayed, kept separate from the stored fundamental relations.
LocalizedElement l1_display() {
  return LocalizedElement(
      QPoly::from_integers({Int(0), Int(33), Int(1392), Int(21120), Int(138240), Int(331776)}, 0), 1);
}

}  // namespace

QSeries u_series(int i, std::int64_t m, std::int64_t n, std::int64_t T) {
  const std::int64_t P = 3 * T;
  QSeries f = eta_quotient_series(eta_library::x(), P).pow(m);
  if (n > 0) f = f * eta_quotient_series(eta_library::z(), P).inverse().pow(n);
  if (i == 0) f = eta_quotient_series(eta_library::A(), P) * f;
  return f.u3().truncated(T);
}

std::optional<QPoly> x_polynomial_from_series(const QSeries& s, const QSeries& x_series, std::int64_t max_degree) {
  const std::int64_t T = std::min(s.precision(), x_series.precision());
  if (T <= max_degree || (!s.is_zero() && s.valuation() < 0)) return std::nullopt;
  QSeries rest = s.truncated(T);
  QSeries power = QSeries::constant(Rat(1), T);
  std::vector<Rat> coeffs;
  for (std::int64_t k = 0; k <= max_degree; ++k) {
    const Rat c = rest.coeff(k);
    coeffs.push_back(c);
    if (c != 0) rest = rest - power.scaled(c);
    power = (power * x_series).truncated(T);
  }
  if (!rest.is_zero()) return std::nullopt;
  return QPoly::from_rationals(coeffs, 0);
}

VerificationReport verify_l1_representation(std::int64_t T) {
  return timed_report("l1-representation", [&](VerificationReport& report) {
    report.add_param("terms", std::to_string(T));
    const QSeries xs = eta_quotient_series(eta_library::x(), T);
    const QSeries zs = eta_quotient_series(eta_library::z(), T);
    const QSeries l1 = l_series_direct(1, T);
    const LocalizedElement display = l1_display();

    CheckResult recovered;
    const auto poly = x_polynomial_from_series(zs * l1, xs, 40);
    recovered.check(poly.has_value() && LocalizedElement(*poly, 1) == display,
                    {{"check", "representation recovered from (1+9x) L_1"},
                     {"recovered", poly ? poly->to_string() : std::string("none")}});
    report.add_row("recovered representation", recovered, poly ? poly->to_string() : "");

    CheckResult expansion;
    const auto diff = display.to_series(xs).first_difference(l1);
    expansion.check(!diff, series_cx("series", "L_1", diff.value_or(-1)));
    report.add_row("expansion vs direct L_1", expansion, std::to_string(T) + " terms");

    CheckResult routes;
    routes.check(apply_u(0, LocalizedElement::x_power(0)) == display, {{"check", "z-route U0(1)"}});
    routes.check(apply_u_by_monomials(0, LocalizedElement::x_power(0)) == display, {{"check", "monomial route U0(1)"}});
    report.add_row("U0(1) routes", routes);
  });
}

VerificationReport verify_fundamental_relations(std::int64_t T) {
  return timed_report("fundamental", [&](VerificationReport& report) {
    report.add_param("terms", std::to_string(T));
    report.add_param("certificate_level", "18");
    report.add_param("certificate_shift", "x(3tau)^-11");
    const QSeries xs = eta_quotient_series(eta_library::x(), T);
    for (int i = 1; i >= 0; --i)
      for (int l = 0; l <= 2; ++l) {
        const std::string name = relation_name(i, l, 0);
        const LocalizedElement rhs = fundamental_relation(i, l);
        CheckResult row;
        const auto diff = u_series(i, l, 0, T).first_difference(rhs.to_series(xs));
        row.check(!diff, series_cx("series identity", name, diff.value_or(-1)));
        row.check(apply_u_monomial(i, l, 0) == rhs, {{"check", "recurrence base"}, {"relation", name}});

        std::vector<EtaFactor> factors{{scaled(eta_library::x(), 3), -11}, {eta_library::x(), l}};
        if (i == 0) {
          factors.push_back({eta_library::A(), 1});
          factors.push_back({scaled(eta_library::z(), 3), 1});
        }
        const SinglePoleCertificate cert = certify_single_pole(factors, Cusp::infinity(), 18);
        Counterexample ccx{{"check", "single pole at infinity"}, {"relation", name}};
        for (const auto& [cusp, ord] : cert.table.rows) ccx.emplace_back("ord " + cusp.to_string(), ord.get_str());
        row.check(cert.single_pole, ccx);
        report.add_row(name, row, rhs.to_string());
      }
    CheckResult spot;
    const Rat c11 = fundamental_relation(0, 2).numerator().coeff(11);
    spot.check(c11 == Rat(Int("8916100448256")), {{"check", "U0(x^2) coefficient of x^11"}, {"value", c11.get_str()}});
    report.add_row("U0(x^2) x^11 coefficient", spot, c11.get_str());
  });
}

VerificationReport verify_initial_relations(std::int64_t T) {
  return timed_report("initial", [&](VerificationReport& report) {
    report.add_param("terms", std::to_string(T));
    const QSeries xs = eta_quotient_series(eta_library::x(), T);
    for (int i = 1; i >= 0; --i) {
      const auto base = base_relations(i);
      for (const auto& [key, value] : base) {
        if (key.second == 0) continue;
        const std::string name = relation_name(i, key.first, key.second);
        CheckResult row;
        row.check(value.is_integral(), {{"check", "integral numerator"}, {"relation", name}});
        const auto diff = u_series(i, key.first, key.second, T).first_difference(value.to_series(xs));
        row.check(!diff, series_cx("series identity", name, diff.value_or(-1)));
        row.check(apply_u(i, LocalizedElement::x_power(key.first, key.second)) == value,
                  {{"check", "z-route agrees"}, {"relation", name}});
        report.add_row(name, row);
      }
    }
  });
}

VerificationReport verify_modular_equations(std::int64_t T) {
  return timed_report("modeq", [&](VerificationReport& report) {
    report.add_param("terms", std::to_string(T));
    const QSeries xs = eta_quotient_series(eta_library::x(), T);
    const QSeries zs = eta_quotient_series(eta_library::z(), T);
    const QSeries xs3 = eta_quotient_series(scaled(eta_library::x(), 3), T);
    const QSeries zs3 = eta_quotient_series(scaled(eta_library::z(), 3), T);

    auto zero_row = [&](const std::string& name, const QSeries& residual) {
      CheckResult row;
      const auto diff = residual.first_difference(QSeries::zero(residual.precision()));
      row.check(!diff, series_cx("residual", name, diff.value_or(-1)));
      report.add_row(name, row, "precision " + std::to_string(residual.precision()));
    };

    zero_row("z - 1 - 9x", zs - QSeries::constant(Rat(1), T) - xs.scaled(Rat(9)));

    CheckResult mod9;
    for (std::int64_t e = 0; e < T; ++e) {
      const Rat c = zs.coeff(e);
      const bool ok = is_integer(c) && mod_floor(c.get_num() - (e == 0 ? 1 : 0), Int(9)) == 0;
      mod9.check(ok, {{"check", "z = 1 mod 9"}, {"exponent", std::to_string(e)}, {"coefficient", c.get_str()}});
    }
    report.add_row("z = 1 (mod 9)", mod9);

    CheckResult substituted;
    const auto d3 = xs.substitute_q_power(3).first_difference(xs3);
    substituted.check(!d3, series_cx("q -> q^3 substitution", "x(3tau)", d3.value_or(-1)));
    report.add_row("x(3tau) by substitution", substituted);

    QSeries mod_x = xs.pow(3);
    for (int j = 0; j < 3; ++j) mod_x = mod_x + eval_poly(modeq::a(j), xs3) * xs.pow(j);
    zero_row("x modular equation", mod_x);

    QSeries mod_z = QSeries::zero(T);
    for (int k = 0; k <= 3; ++k) mod_z = mod_z + eval_poly(modeq::b(k), zs3) * zs.pow(k);
    zero_row("z modular equation", mod_z);

    CheckResult derived;
    modeq::BiPoly scaled_x = modeq::mod_x_in_z();
    for (auto& row : scaled_x.rows)
      for (auto& c : row) c *= 729;
    derived.check(scaled_x == modeq::mod_z_polynomial(), {{"check", "729 modX((z-1)/9, (Z-1)/9) = modZ"}});
    derived.check(modeq::b(3) == QPoly::constant(Rat(1)), {{"check", "b_3 = 1"}});
    report.add_row("z equation from x equation", derived);
  });
}

VerificationReport verify_u3_contract(std::int64_t T) {
  return timed_report("u3-contract", [&](VerificationReport& report) {
    report.add_param("terms", std::to_string(T));
    const std::int64_t P = 3 * T + 40;
    const QSeries xs = eta_quotient_series(eta_library::x(), T + 12);
    const QSeries zs = eta_quotient_series(eta_library::z(), T + 12);
    const QSeries X = eta_quotient_series(eta_library::x(), P);
    const QSeries A = eta_quotient_series(eta_library::A(), P);
    const QSeries shift = eta_quotient_series(scaled(eta_library::x(), 3), P).inverse().pow(11);
    const QSeries Z3 = eta_quotient_series(scaled(eta_library::z(), 3), P);
    const QSeries x_inv11 = xs.inverse().pow(11);

    for (int i = 1; i >= 0; --i)
      for (int l = 0; l <= 2; ++l) {
        const std::string name = relation_name(i, l, 0);
        CheckResult row;
        QSeries inner = shift * X.pow(l);
        if (i == 0) inner = A * Z3 * inner;
        const QSeries image = inner.u3();
        row.check(image.is_zero() || image.valuation() >= -11,
                  {{"check", "pole order <= 11"}, {"relation", name}, {"valuation", std::to_string(image.valuation())}});
        QSeries expected = fundamental_relation(i, l).to_series(xs) * x_inv11;
        if (i == 0) expected = expected * zs;
        for (std::int64_t e = -11; e <= 0; ++e)
          row.check(image.coeff(e) == expected.coeff(e),
                    {{"check", "principal part and constant"}, {"relation", name}, {"exponent", std::to_string(e)}});
        const auto diff = image.first_difference(expected);
        row.check(!diff, series_cx("full expansion", name, diff.value_or(-1)));
        report.add_row(name + " x(3tau)^-11", row, "valuation " + std::to_string(image.valuation()));
      }

    CheckResult holomorphic;
    for (int l = 0; l <= 2; ++l) {
      const QSeries image = (A * X.pow(l)).u3();
      holomorphic.check(image.is_zero() || image.valuation() >= 0,
                        {{"check", "holomorphic input"}, {"l", std::to_string(l)}, {"valuation", std::to_string(image.valuation())}});
    }
    report.add_row("U3(A x^l) holomorphic", holomorphic);

    CheckResult l1;
    const QSeries L1 = l_series_direct(1, T);
    l1.check(!L1.is_zero() && L1.valuation() == 1 && L1.coeff(1) == 33,
             {{"check", "L_1 = 33 q + ..."}, {"valuation", std::to_string(L1.valuation())}});
    report.add_row("L_1 valuation", l1);
  });
}

}  // namespace cforge
