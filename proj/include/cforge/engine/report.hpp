// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cforge/check_result.hpp"

namespace cforge {

/// One named sub-check inside a report, e.g. one relation or one alpha.
struct ReportRow {
  std::string name;
  bool passed = true;
  std::string detail;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct VerificationReport {
  std::string task;
  bool passed = true;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportRow> rows;
  std::int64_t elapsed_ms = 0;

  void add_param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  /// Folds a batch of checks in; passed becomes false on any failure.
  void absorb(const CheckResult& result);
  /// Appends a row and folds its checks in.
  void add_row(std::string name, const CheckResult& result, std::string detail = {});

  /// Aligned human-readable rendering.
  std::string to_text() const;

  /// Field-wise equality ignoring elapsed_ms.
  bool same_content(const VerificationReport& other) const;
};

/// Runs body(report), stamping task name and elapsed time.
template <class Body>
VerificationReport timed_report(std::string task, Body&& body) {
  VerificationReport report;
  report.task = std::move(task);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cforge
