// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion.
//
// Two criteria fail on the reference data itself (see README, "Known discrepancies"). They are
// reported as FAIL. The exit status is zero only when every other criterion passes and each of
// the two failures consists of exactly the recorded counterexamples, so any change in either
// direction is caught.

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cforge/engine/congruence.hpp"
#include "cforge/engine/cusp_checks.hpp"
#include "cforge/engine/properties.hpp"
#include "cforge/engine/relations.hpp"
#include "cforge/engine/stability.hpp"
#include "cforge/engine/tables.hpp"
#include "cforge/locring/modular_equations.hpp"
#include "cforge/locring/v_sets.hpp"

using namespace cforge;

namespace {

constexpr std::uint64_t kSeed = 20261015;

std::string field(const Counterexample& cx, const std::string& key) {
  for (const auto& [k, v] : cx)
    if (k == key) return v;
  return {};
}

VerificationReport merge(std::string task, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.task = std::move(task);
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    out.instances += p.instances;
    out.failures += p.failures;
    for (const auto& cx : p.counterexamples) out.counterexamples.push_back(cx);
    for (const auto& r : p.rows) out.rows.push_back({p.task + ": " + r.name, r.passed, r.detail});
    out.elapsed_ms += p.elapsed_ms;
  }
  return out;
}

// The stated h_1(m,3n+1,1) = 0 (mod 9) fails for every m <= 3, n <= 10; every value is 1 mod 9.
bool matches_h_discrepancy(const VerificationReport& r) {
  if (r.failures != 33 || r.counterexamples.size() != 33) return false;
  for (const auto& row : r.rows)
    if (row.name != "stated congruences" && !row.passed) return false;
  for (const auto& cx : r.counterexamples) {
    if (field(cx, "check") != "h_1(m,3n+1,1) = 0 mod 9") return false;
    if (mod_floor(Int(field(cx, "h")), Int(9)) != 1) return false;
  }
  return true;
}

// The printed that(3) repeats that(2) from s(4) on; the computed entries below are what the
// printed sum row requires.
bool matches_that_discrepancy(const VerificationReport& r) {
  static const std::map<std::string, std::string> computed{
      {"that(3) s(4)", "6332504419"},  {"that(3) s(5)", "15950675878"}, {"that(3) s(6)", "20231534017"},
      {"that(3) s(7)", "44928767016"}, {"that(3) s(8)", "63287781921"}, {"that(3) s(9)", "59316685155"},
      {"that(3) s(10)", "12633117777"}, {"that(3) s(11)", "5530080276"}, {"that(3) s(12)", "1633087575"},
      {"that(3) s(13)", "311160528"},  {"that(3) s(14)", "11517471"},   {"that(3) s(15)", "566433"}};
  if (r.failures != computed.size() || r.counterexamples.size() != computed.size()) return false;
  const ThatForms& printed = printed_that_forms();
  for (const auto& cx : r.counterexamples) {
    const auto it = computed.find(field(cx, "term"));
    if (field(cx, "check") != "printed coefficient" || it == computed.end() || field(cx, "computed") != it->second)
      return false;
    const std::size_t m = static_cast<std::size_t>(std::stoi(it->first.substr(10))) - 1;
    if (field(cx, "printed") != printed.that[1][m].get_str()) return false;
  }
  return true;
}

struct Criterion {
  int number;
  std::string title;
  std::function<VerificationReport()> run;
  std::function<bool(const VerificationReport&)> known_discrepancy;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "3^beta | d_2 on 50 progression terms, alpha = 1..6", [] { return check_congruence_direct(6, 50); }, {}},
      {2, "L_1 representation and 200-term expansion", [] { return verify_l1_representation(200); }, {}},
      {3, "six fundamental relations to 100 terms", [] { return verify_fundamental_relations(100); }, {}},
      {4, "modular equations, z = 1 + 9x, z = 1 (mod 9) to 200 terms", [] { return verify_modular_equations(200); },
       {}},
      {5, "cusp orders of A, x, x(3tau), z(3tau) on X_0(18)", [] { return verify_cusp_orders(); }, {}},
      {6, "order lower bounds for L_1 on X_0(6)", [] { return verify_radu_bounds(); }, {}},
      {7, "exponent tables and inequalities, m, r <= 60, l <= 12", [] { return verify_exponent_lemmas(60, 60, 12); },
       {}},
      {8, "h-array shape (m, n <= 9) and congruences (n <= 10)", [] { return verify_h_arrays(10, 9, -1); },
       matches_h_discrepancy},
      {9, "composite forms that(1..3) and their sum", [] { return verify_that_forms(); }, matches_that_discrepancy},
      {10, "stability iteration, alpha = 1..5", [] { return stability_iteration(5); }, {}},
      {11, "property suites, 200 samples per suite",
       [] {
         return merge("properties",
                      {property_series_ring(kSeed, 200), property_u3(kSeed, 200), property_order_additivity(kSeed, 200),
                       property_degree_zero(kSeed, 200), property_u0_stability(kSeed, 200),
                       property_u1_stability(kSeed, 200), property_composite_stability(kSeed, 200)});
       },
       {}},
  };

  int passed = 0, recorded = 0, unexpected = 0;
  for (const Criterion& c : criteria) {
    const VerificationReport r = c.run();
    const bool ok = r.passed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "  (" << r.instances
              << " checks, " << r.failures << " failed, " << r.elapsed_ms << " ms)\n";
    if (ok) {
      ++passed;
    } else if (c.known_discrepancy && c.known_discrepancy(r)) {
      ++recorded;
      std::cout << "      failure set equals the recorded discrepancy\n";
    } else {
      ++unexpected;
    }
    if (!ok)
      for (std::size_t k = 0; k < r.counterexamples.size() && k < 3; ++k) {
        std::cout << "      ";
        for (const auto& [key, v] : r.counterexamples[k]) std::cout << ' ' << key << '=' << v;
        std::cout << '\n';
      }
    if (c.number == 3) {
      const QPoly& u0x2 = fundamental_relation(0, 2).numerator();
      const ThatForms forms = that_vectors();
      std::cout << "      note: U0(x^2) has numerator degree " << u0x2.degree()
                << "; 1201392 occurs as the s(13) coefficient of that(2) (" << forms.that[1][12].get_str() << ")\n";
    }
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass; " << recorded
            << " fail exactly as recorded; " << unexpected << " fail unexpectedly\n";
  return unexpected == 0 ? 0 : 1;
}
