// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/cusp_checks.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cforge/cusp/cusp.hpp"
#include "cforge/series/eta.hpp"

namespace cforge {
namespace {

struct PrintedColumn {
  std::string name;
  EtaQuotient quotient;
  std::int64_t level;
  std::vector<std::pair<const char*, long>> orders;
};

EtaQuotient scaled(EtaQuotient q, std::int64_t k) {
  q.scale = k;
  return q;
}

// Row order of the printed table.
constexpr const char* kRows18[] = {"inf", "1/9", "1/6", "1/3", "1/2", "2/3", "5/6", "0"};
constexpr const char* kRows6[] = {"inf", "1/3", "1/2", "0"};

std::vector<PrintedColumn> printed_columns() {
  auto col18 = [](std::string name, EtaQuotient q, std::initializer_list<long> v) {
    PrintedColumn c{std::move(name), std::move(q), 18, {}};
    std::size_t k = 0;
    for (long o : v) c.orders.emplace_back(kRows18[k++], o);
    return c;
  };
  auto col6 = [](std::string name, EtaQuotient q, std::initializer_list<long> v) {
    PrintedColumn c{std::move(name), std::move(q), 6, {}};
    std::size_t k = 0;
    for (long o : v) c.orders.emplace_back(kRows6[k++], o);
    return c;
  };
  return {
      col18("A", eta_library::A(), {1, 4, 0, 0, -1, 0, 0, -4}),
      col18("x", eta_library::x(), {1, 0, 1, 0, 0, 0, 1, -3}),
      col18("x(3tau)", scaled(eta_library::x(), 3), {3, 0, 0, -1, 0, -1, 0, -1}),
      col18("z(3tau)", scaled(eta_library::z(), 3), {0, 0, 1, -1, 1, -1, 1, -1}),
      col6("x on X_0(6)", eta_library::x(), {1, 0, 0, -1}),
      col6("z on X_0(6)", eta_library::z(), {0, 0, 1, -1}),
  };
}

}  // namespace

VerificationReport verify_cusp_orders() {
  return timed_report("cusp-orders", [](VerificationReport& report) {
    for (const PrintedColumn& col : printed_columns()) {
      report.add_param(col.name, col.quotient.to_string());
      const CuspOrderTable table = order_table(col.quotient, col.level);
      CheckResult row;
      for (const auto& [label, printed] : col.orders) {
        const Cusp target = Cusp::parse(label);
        const Rat* found = nullptr;
        std::size_t matches = 0;
        for (const auto& [cusp, ord] : table.rows)
          if (cusp_equivalent(cusp, target, col.level)) {
            found = &ord;
            ++matches;
          }
        const bool ok = matches == 1 && *found == Rat(printed);
        row.check(ok, {{"check", "printed order"}, {"function", col.name}, {"cusp", label},
                       {"level", std::to_string(col.level)},
                       {"computed", found ? found->get_str() : std::string("no matching cusp")},
                       {"printed", std::to_string(printed)}});
      }
      row.check(table.degree() == 0, {{"check", "degree zero"}, {"function", col.name}, {"sum", table.degree().get_str()}});
      std::string detail;
      for (const auto& [cusp, ord] : table.rows) detail += (detail.empty() ? "" : " ") + cusp.to_string() + ":" + ord.get_str();
      report.add_row(col.name + " (level " + std::to_string(col.level) + ")", row, detail);
    }
  });
}

VerificationReport verify_radu_bounds() {
  return timed_report("radu-bounds", [](VerificationReport& report) {
    const std::map<std::int64_t, std::int64_t> gen{{1, -7}, {2, 2}};
    const std::map<std::int64_t, std::int64_t> prefactor{{3, 7}, {6, -2}};
    report.add_param("level", "6");
    report.add_param("generating_function", "eta(tau)^-7 eta(2tau)^2");
    report.add_param("sieve", "m=3, t=2");
    report.add_param("prefactor", "eta(3tau)^7 eta(6tau)^-2");
    const std::vector<std::pair<const char*, Rat>> printed{
        {"inf", Rat(1, 3)}, {"1/3", Rat(4, 3)}, {"1/2", Rat(-1)}, {"0", Rat(-4)}};
    for (const auto& [label, want] : printed) {
      const Cusp cusp = Cusp::parse(label);
      const Rat got = radu_lower_bound(gen, 3, 2, prefactor, cusp, 6);
      CheckResult row;
      row.check(got == want, {{"check", "printed bound"}, {"cusp", label}, {"computed", got.get_str()},
                              {"printed", want.get_str()}});
      report.add_row(std::string("ord at ") + label, row, ">= " + got.get_str());
    }
  });
}

}  // namespace cforge
