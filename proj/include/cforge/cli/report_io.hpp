// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "cforge/engine/report.hpp"
#include "json.hpp"

namespace cforge::cli {

enum class ReportFormat { json, text };

/// {"task", "status", "instances", "failures", "counterexamples", "params", "rows", "elapsed_ms"}.
/// Counterexample and param values stay strings, so big integers and p/q rationals survive intact.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// Inverse of report_to_json; throws nlohmann::json::exception on malformed input.
VerificationReport report_from_json(const nlohmann::ordered_json& doc);

std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace cforge::cli
