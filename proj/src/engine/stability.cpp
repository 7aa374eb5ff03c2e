// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/stability.hpp"

#include <algorithm>
#include <string>

#include "cforge/engine/l_series.hpp"
#include "cforge/locring/exponents.hpp"
#include "cforge/locring/localized.hpp"
#include "cforge/locring/modular_equations.hpp"
#include "cforge/locring/u_operator.hpp"
#include "cforge/locring/v_sets.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {

VerificationReport stability_iteration(std::int64_t alpha_max, std::int64_t T, std::int64_t min_overlap) {
  return timed_report("stability", [&](VerificationReport& report) {
    report.add_param("alpha_max", std::to_string(alpha_max));
    report.add_param("min_overlap", std::to_string(min_overlap));
    LocalizedElement f = fundamental_relation(0, 0).scaled(Rat(1, 3));
    for (std::int64_t alpha = 1; alpha <= alpha_max; ++alpha) {
      if (alpha > 1) {
        f = alpha % 2 == 0 ? apply_u(1, f).scaled(Rat(1, 9)) : apply_u(0, f);
      }
      const int parity = alpha % 2 == 1 ? 1 : 0;
      const std::int64_t psi = exponents::psi(alpha);
      const std::int64_t beta = exponents::beta(alpha);
      const std::string name = "alpha=" + std::to_string(alpha);

      CheckResult row;
      const VMembership member = v_membership(f, parity, psi);
      row.check(member.ok(), {{"check", "membership"}, {"alpha", std::to_string(alpha)},
                              {"set", "V" + std::to_string(parity) + "_" + std::to_string(psi)},
                              {"reason", member.diagnosis}});

      const std::int64_t needed = std::max(min_overlap + 1, f.numerator().degree() + 2);
      std::int64_t precision = T > 0 ? T : needed;
      if (precision < needed) {
        row.fail({{"check", "precision"}, {"alpha", std::to_string(alpha)}, {"requested", std::to_string(T)},
                  {"needed", std::to_string(needed)}});
      } else {
        const QSeries xs = eta_quotient_series(eta_library::x(), precision);
        const QSeries expected = l_series(alpha, precision).scaled(Rat(1) / Rat(pow3(static_cast<unsigned long>(beta))));
        const auto diff = f.to_series(xs).first_difference(expected);
        row.check(!diff, {{"check", "f_alpha = L_alpha / 3^beta"}, {"alpha", std::to_string(alpha)},
                          {"first_bad_exponent", std::to_string(diff.value_or(-1))}});
      }
      std::string detail = "V" + std::to_string(parity) + "_" + std::to_string(psi) + ", beta " + std::to_string(beta) +
                           ", degree " + std::to_string(f.numerator().degree()) + ", terms " + std::to_string(precision);
      if (member.ok() && !member.decomposition->s.empty())
        detail += ", s(1) = " + (member.decomposition->s.count(1) ? member.decomposition->s.at(1).get_str() : std::string("0"));
      report.add_row(name, row, detail);
    }
  });
}

}  // namespace cforge
