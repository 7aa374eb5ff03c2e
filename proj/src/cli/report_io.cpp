// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/cli/report_io.hpp"

namespace cforge::cli {

using nlohmann::ordered_json;

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["task"] = report.task;
  doc["status"] = report.passed ? "pass" : "fail";
  doc["instances"] = report.instances;
  doc["failures"] = report.failures;
  ordered_json cxs = ordered_json::array();
  for (const auto& cx : report.counterexamples) {
    ordered_json entry = ordered_json::object();
    for (const auto& [k, v] : cx) entry[k] = v;
    cxs.push_back(std::move(entry));
  }
  doc["counterexamples"] = std::move(cxs);
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  doc["params"] = std::move(params);
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
  doc["rows"] = std::move(rows);
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc;
}

VerificationReport report_from_json(const ordered_json& doc) {
  VerificationReport report;
  report.task = doc.at("task").get<std::string>();
  report.passed = doc.at("status").get<std::string>() == "pass";
  report.instances = doc.at("instances").get<std::size_t>();
  report.failures = doc.at("failures").get<std::size_t>();
  for (const auto& entry : doc.at("counterexamples")) {
    Counterexample cx;
    for (const auto& [k, v] : entry.items()) cx.emplace_back(k, v.get<std::string>());
    report.counterexamples.push_back(std::move(cx));
  }
  for (const auto& [k, v] : doc.at("params").items()) report.params.emplace_back(k, v.get<std::string>());
  for (const auto& r : doc.at("rows"))
    report.rows.push_back({r.at("name").get<std::string>(), r.at("status").get<std::string>() == "pass",
                           r.at("detail").get<std::string>()});
  report.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
  return report;
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::text) return report.to_text();
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace cforge::cli
