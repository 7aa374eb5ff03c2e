// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace cforge {

/// Ordered key/value reproduction data for one failing instance.
using Counterexample = std::vector<std::pair<std::string, std::string>>;

/// Outcome of a batch of exact checks. Only the first kMaxStored counterexamples are kept.
struct CheckResult {
  static constexpr std::size_t kMaxStored = 64;

  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return failures == 0; }

  /// Counts one instance; records `cx` when ok is false.
  void check(bool ok, const Counterexample& cx) {
    ++instances;
    if (!ok) fail(cx);
  }
  void fail(Counterexample cx) {
    ++failures;
    if (counterexamples.size() < kMaxStored) counterexamples.push_back(std::move(cx));
  }
  void merge(const CheckResult& other) {
    instances += other.instances;
    failures += other.failures;
    for (const auto& cx : other.counterexamples)
      if (counterexamples.size() < kMaxStored) counterexamples.push_back(cx);
  }
};

}  // namespace cforge
