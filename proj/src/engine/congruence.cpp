// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/congruence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cforge/engine/parameters.hpp"
#include "cforge/kernels/residue_kernels.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {

VerificationReport check_congruence_direct(std::int64_t alpha_max, std::int64_t cases_per_alpha) {
  if (alpha_max < 1 || cases_per_alpha < 1) throw std::invalid_argument("alpha_max and cases must be positive");
  return timed_report("congruence", [&](VerificationReport& report) {
    report.add_param("alpha_max", std::to_string(alpha_max));
    report.add_param("cases_per_alpha", std::to_string(cases_per_alpha));

    std::int64_t top_n = 0;
    std::int64_t top_beta = 0;
    for (std::int64_t a = 1; a <= alpha_max; ++a) {
      const auto p = CongruenceParameters::for_alpha(a);
      top_n = std::max(top_n, p.lambda + (cases_per_alpha - 1) * pow3(static_cast<unsigned long>(a)).get_si());
      top_beta = std::max(top_beta, p.beta);
    }
    const std::int64_t T = top_n + 1;
    report.add_param("terms", std::to_string(T));
    const IntVec d = dk_coefficients(2, T);

    const Int residue_modulus = pow3(static_cast<unsigned long>(top_beta));
    const bool residue_ok = residue_modulus <= Int(static_cast<unsigned long>(kernels::kMaxModulus));
    std::vector<std::uint32_t> residues;
    if (residue_ok) residues = dk_residues(2, T, static_cast<std::uint32_t>(residue_modulus.get_ui()));
    report.add_param("residue_kernels", std::string(kernels::best_kernels().name));

    for (std::int64_t a = 1; a <= alpha_max; ++a) {
      const auto p = CongruenceParameters::for_alpha(a);
      CheckResult row = p.validate();
      const Int step = pow3(static_cast<unsigned long>(a));
      const Int full = pow3(static_cast<unsigned long>(p.beta));
      const Int conj = pow3(static_cast<unsigned long>(a));
      row.check(p.beta - a == (a % 2 == 0 ? 1 : 0),
                {{"check", "extra power for even alpha"}, {"alpha", std::to_string(a)}, {"beta", std::to_string(p.beta)}});
      for (std::int64_t k = 0; k < cases_per_alpha; ++k) {
        const std::int64_t n = p.lambda + k * step.get_si();
        const Int& value = d[static_cast<std::size_t>(n)];
        const auto where = [&](const char* what, const Int& mod) {
          return Counterexample{{"check", what},
                                {"alpha", std::to_string(a)},
                                {"n", std::to_string(n)},
                                {"residue", mod_floor(value, mod).get_str()},
                                {"modulus", mod.get_str()}};
        };
        row.check(divisible(value, full), where("3^beta | d_2(n)", full));
        row.check(divisible(value, conj), where("3^alpha | d_2(n)", conj));
        if (residue_ok)
          row.check(mod_floor(value, residue_modulus) == residues[static_cast<std::size_t>(n)],
                    where("residue kernel agrees", residue_modulus));
      }
      report.add_row("alpha=" + std::to_string(a), row,
                     "lambda=" + std::to_string(p.lambda) + " beta=" + std::to_string(p.beta));
    }
  });
}

}  // namespace cforge
