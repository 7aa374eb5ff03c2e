// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/tables.hpp"

#include <algorithm>
#include <string>

#include "cforge/locring/exponents.hpp"
#include "cforge/locring/h_array.hpp"
#include "cforge/locring/v_sets.hpp"

namespace cforge {

VerificationReport verify_exponent_lemmas(std::int64_t m_max, std::int64_t r_max, std::int64_t l_max) {
  return timed_report("lemmas", [&](VerificationReport& report) {
    report.add_param("m_max", std::to_string(m_max));
    report.add_param("r_max", std::to_string(r_max));
    report.add_param("l_max", std::to_string(l_max));
    report.add_row("exponent inequalities and tables", exponents::check_exponent_lemmas(m_max, r_max, l_max));
    report.add_row("recurrence weight expansions", w_expansions().checks);
  });
}

VerificationReport verify_h_arrays(std::int64_t n_max, std::int64_t m_max, std::int64_t r_max) {
  return timed_report("h-congruences", [&](VerificationReport& report) {
    const std::int64_t shape_n = std::min<std::int64_t>(n_max, 9);
    report.add_param("n_max", std::to_string(n_max));
    report.add_param("m_max", std::to_string(m_max));
    report.add_param("r_max", r_max < 0 ? std::string("full degree") : std::to_string(r_max));
    report.add_row("shape and divisibility", check_h_shape(m_max, shape_n),
                   "m <= " + std::to_string(m_max) + ", n <= " + std::to_string(shape_n));
    CheckResult residue_one;
    const CheckResult stated = check_h_congruences(n_max, r_max, m_max, &residue_one);
    report.add_row("stated congruences", stated);
    report.add_row("h_1(m,3n+1,1) = 1 (mod 9)", residue_one, "companion form");
  });
}

VerificationReport verify_that_forms() {
  return timed_report("that", [](VerificationReport& report) {
    const ThatForms forms = that_vectors();
    std::string sum;
    for (std::size_t m = 0; m < 3; ++m) sum += (m ? ", " : "") + forms.sum[m].get_str();
    report.add_row("printed forms, lattice integrality, sum mod 9", check_that_forms(forms), "sum s(1..3): " + sum);
  });
}

}  // namespace cforge
