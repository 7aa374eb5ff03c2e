// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/report.hpp"

#include <algorithm>
#include <sstream>

namespace cforge {

void VerificationReport::absorb(const CheckResult& result) {
  instances += result.instances;
  failures += result.failures;
  for (const auto& cx : result.counterexamples)
    if (counterexamples.size() < CheckResult::kMaxStored) counterexamples.push_back(cx);
  if (!result.passed()) passed = false;
}

void VerificationReport::add_row(std::string name, const CheckResult& result, std::string detail) {
  rows.push_back({std::move(name), result.passed(), std::move(detail)});
  absorb(result);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "task      " << task << '\n';
  os << "status    " << (passed ? "pass" : "fail") << '\n';
  os << "instances " << instances << '\n';
  os << "failures  " << failures << '\n';
  os << "elapsed   " << elapsed_ms << " ms\n";
  std::size_t width = 0;
  for (const auto& [k, v] : params) width = std::max(width, k.size());
  for (const auto& r : rows) width = std::max(width, r.name.size());
  if (!params.empty()) os << "params\n";
  for (const auto& [k, v] : params) os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  if (!rows.empty()) os << "rows\n";
  for (const auto& r : rows) {
    os << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << (r.passed ? "pass" : "FAIL");
    if (!r.detail.empty()) os << "  " << r.detail;
    os << '\n';
  }
  if (!counterexamples.empty()) os << "counterexamples\n";
  for (const auto& cx : counterexamples) {
    os << " ";
    for (const auto& [k, v] : cx) os << ' ' << k << '=' << v;
    os << '\n';
  }
  return os.str();
}

bool VerificationReport::same_content(const VerificationReport& o) const {
  return task == o.task && passed == o.passed && instances == o.instances && failures == o.failures &&
         counterexamples == o.counterexamples && params == o.params && rows == o.rows;
}

}  // namespace cforge
