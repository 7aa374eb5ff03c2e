// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/parameters.hpp"

#include <string>

#include "cforge/locring/exponents.hpp"

namespace cforge {

CongruenceParameters CongruenceParameters::for_alpha(std::int64_t alpha) {
  return {alpha, exponents::lambda(alpha), exponents::psi(alpha), exponents::beta(alpha)};
}

CheckResult CongruenceParameters::validate() const {
  CheckResult out;
  auto row = [&](const char* what) {
    return Counterexample{{"check", what}, {"alpha", std::to_string(alpha)}, {"lambda", std::to_string(lambda)},
                          {"psi", std::to_string(psi)}, {"beta", std::to_string(beta)}};
  };
  std::int64_t modulus = 1;
  for (std::int64_t k = 0; k < alpha; ++k) modulus *= 3;
  std::int64_t minimal = 1;
  while ((8 * minimal) % modulus != 1 % modulus) ++minimal;
  out.check(lambda == minimal, row("lambda minimal solution of 8x = 1"));
  out.check(beta == 2 * (alpha / 2) + 1, row("beta"));
  if (alpha % 2 == 0) {
    out.check(3 * exponents::psi(alpha - 1) == psi, row("3 psi(2a-1) = psi(2a)"));
    out.check(3 * psi + 1 == exponents::psi(alpha + 1), row("3 psi(2a) + 1 = psi(2a+1)"));
  }
  return out;
}

}  // namespace cforge
