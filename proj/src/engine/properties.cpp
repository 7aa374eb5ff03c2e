// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/engine/properties.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cforge/cusp/cusp.hpp"
#include "cforge/locring/u_operator.hpp"
#include "cforge/locring/v_sets.hpp"
#include "cforge/series/eta.hpp"
#include "cforge/series/qseries.hpp"

namespace cforge {
namespace {

constexpr std::int64_t kLevel = 18;
constexpr std::int64_t kDivisors18[] = {1, 2, 3, 6, 9, 18};

// Runs body(k) for k < count on worker_threads() threads; results are merged in index order.
CheckResult parallel_checks(std::size_t count, const std::function<CheckResult(std::size_t)>& body) {
  std::vector<CheckResult> results(count);
  const unsigned workers = std::min<unsigned>(worker_threads(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) results[k] = body(k);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  CheckResult out;
  for (const auto& r : results) out.merge(r);
  return out;
}

QSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> offset(-3, 3), length(1, 30), extra(0, 5), value(-9, 9), den(1, 4);
  const std::int64_t v = offset(rng);
  const int len = length(rng);
  std::vector<Rat> coeffs;
  for (int k = 0; k < len; ++k) coeffs.push_back(make_rat(Int(value(rng)), Int(den(rng))));
  return QSeries::from_rationals(v, coeffs, v + len + extra(rng));
}

Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  return make_rat(Int(num(rng)), Int(den(rng)));
}

EtaQuotient random_quotient(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  EtaQuotient q{kLevel, {}, 1};
  for (std::int64_t d : kDivisors18)
    if (const int r = e(rng); r != 0) q.exponents[d] = r;
  return q;
}

Counterexample sample_cx(const std::string& check, std::uint64_t seed, std::size_t k) {
  return {{"check", check}, {"seed", std::to_string(seed)}, {"sample", std::to_string(k)}};
}

Counterexample with(Counterexample cx, const std::string& key, const std::string& value) {
  cx.emplace_back(key, value);
  return cx;
}

std::string describe(const VDecomposition& d) {
  std::string out;
  for (const auto& [m, v] : d.s) out += (out.empty() ? "" : ",") + std::to_string(m) + ":" + v.get_str();
  return out;
}

struct VSample {
  std::int64_t n = 0;
  VDecomposition element;
};

std::vector<VSample> v_samples(std::uint64_t seed, std::int64_t samples, int parity, const std::vector<std::int64_t>& ns) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, ns.size() - 1);
  std::vector<VSample> out;
  for (std::int64_t k = 0; k < samples; ++k) {
    const std::int64_t n = ns[pick(rng)];
    out.push_back({n, random_v_element(parity, n, rng)});
  }
  return out;
}

// Shared driver for the three stability suites.
VerificationReport stability_report(const std::string& task, std::uint64_t seed, std::int64_t samples, int parity,
                                  const std::vector<std::int64_t>& ns,
                                  const std::function<void(const VSample&, CheckResult&, const Counterexample&)>& body) {
  return timed_report(task, [&](VerificationReport& report) {
    report.add_param("seed", std::to_string(seed));
    report.add_param("samples", std::to_string(samples));
    const std::vector<VSample> pool = v_samples(seed, samples, parity, ns);
    const CheckResult result = parallel_checks(pool.size(), [&](std::size_t k) {
      CheckResult r;
      const VSample& s = pool[k];
      Counterexample base = sample_cx(task, seed, k);
      base.emplace_back("n", std::to_string(s.n));
      base.emplace_back("s", describe(s.element));
      body(s, r, base);
      return r;
    });
    report.add_row(task, result, std::to_string(samples) + " samples");
  });
}

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("CONGRUENCE_FORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport property_series_ring(std::uint64_t seed, std::int64_t samples) {
  return timed_report("series-ring", [&](VerificationReport& report) {
    report.add_param("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    CheckResult assoc, comm, distrib, inverse;
    for (std::int64_t k = 0; k < samples; ++k) {
      const QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
      const auto cx = [&](const char* what) { return sample_cx(what, seed, static_cast<std::size_t>(k)); };
      assoc.check(((a + b) + c).equals_on_overlap(a + (b + c)), cx("additive associativity"));
      assoc.check(((a * b) * c).equals_on_overlap(a * (b * c)), cx("multiplicative associativity"));
      comm.check((a + b).equals_on_overlap(b + a), cx("additive commutativity"));
      comm.check((a * b).equals_on_overlap(b * a), cx("multiplicative commutativity"));
      distrib.check((a * (b + c)).equals_on_overlap(a * b + a * c), cx("distributivity"));
      if (!a.is_zero())
        inverse.check((a * a.inverse()).equals_on_overlap(QSeries::constant(Rat(1), a.precision())), cx("inverse"));
    }
    report.add_row("associativity", assoc);
    report.add_row("commutativity", comm);
    report.add_row("distributivity", distrib);
    report.add_row("inverse", inverse);
  });
}

VerificationReport property_u3(std::uint64_t seed, std::int64_t samples) {
  return timed_report("u3", [&](VerificationReport& report) {
    report.add_param("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    CheckResult linear, sifting;
    for (std::int64_t k = 0; k < samples; ++k) {
      const QSeries f = random_series(rng), g = random_series(rng);
      const Rat alpha = random_rational(rng);
      const auto cx = [&](const char* what) { return sample_cx(what, seed, static_cast<std::size_t>(k)); };
      linear.check((f.scaled(alpha) + g).u3().equals_on_overlap(f.u3().scaled(alpha) + g.u3()), cx("linearity"));
      sifting.check((f.substitute_q_power(3) * g).u3().equals_on_overlap(f * g.u3()), cx("sifting"));
    }
    report.add_row("linearity", linear);
    report.add_row("sifting", sifting);
  });
}

VerificationReport property_order_additivity(std::uint64_t seed, std::int64_t samples) {
  return timed_report("order-additivity", [&](VerificationReport& report) {
    report.add_param("seed", std::to_string(seed));
    report.add_param("level", std::to_string(kLevel));
    std::mt19937_64 rng(seed);
    CheckResult additive, negation;
    for (std::int64_t k = 0; k < samples; ++k) {
      const EtaQuotient f = random_quotient(rng, 6), g = random_quotient(rng, 6);
      const CuspOrderTable tf = order_table(f, kLevel), tg = order_table(g, kLevel);
      const CuspOrderTable tfg = order_table(f * g, kLevel), tinv = order_table(f.pow(-1), kLevel);
      for (std::size_t c = 0; c < tf.rows.size(); ++c) {
        const auto cx = [&](const char* what) {
          return with(with(sample_cx(what, seed, static_cast<std::size_t>(k)), "f", f.to_string()), "cusp",
                      tf.rows[c].first.to_string());
        };
        additive.check(tfg.rows[c].second == tf.rows[c].second + tg.rows[c].second, with(cx("ord(fg)"), "g", g.to_string()));
        negation.check(tinv.rows[c].second == -tf.rows[c].second, cx("ord(1/f)"));
      }
    }
    report.add_row("ord(fg) = ord(f) + ord(g)", additive);
    report.add_row("ord(1/f) = -ord(f)", negation);
  });
}

VerificationReport property_degree_zero(std::uint64_t seed, std::int64_t samples) {
  return timed_report("degree-zero", [&](VerificationReport& report) {
    report.add_param("seed", std::to_string(seed));
    report.add_param("level", std::to_string(kLevel));
    std::mt19937_64 rng(seed);
    EtaQuotient x3 = eta_library::x();
    x3.scale = 3;
    EtaQuotient z3 = eta_library::z();
    z3.scale = 3;
    const std::vector<EtaQuotient> generators{eta_library::A(), eta_library::x(), x3, eta_library::z(), z3};
    std::uniform_int_distribution<int> e(-3, 3);

    CheckResult products, sampled;
    std::size_t rejected = 0;
    for (std::int64_t k = 0; k < samples; ++k) {
      EtaQuotient f{kLevel, {}, 1};
      for (const auto& gen : generators) f = f * gen.rescaled_at(kLevel).pow(e(rng));
      f.level = kLevel;
      const auto cx = [&](const char* what, const EtaQuotient& q, const Rat& degree) {
        return with(with(sample_cx(what, seed, static_cast<std::size_t>(k)), "quotient", q.to_string()), "degree",
                    degree.get_str());
      };
      const Rat d = order_table(f, kLevel).degree();
      products.check(newman_is_modular(f).modular() && d == 0, cx("product of modular generators", f, d));

      // Rejection sampling over raw exponent vectors.
      EtaQuotient g = random_quotient(rng, 4);
      while (!newman_is_modular(g).modular()) {
        g = random_quotient(rng, 4);
        ++rejected;
      }
      const Rat dg = order_table(g, kLevel).degree();
      sampled.check(dg == 0, cx("Newman-modular quotient", g, dg));
    }
    report.add_param("rejected_draws", std::to_string(rejected));
    report.add_row("products of A, x, x(3tau), z, z(3tau)", products);
    report.add_row("random modular quotients", sampled);
  });
}

VerificationReport property_u0_stability(std::uint64_t seed, std::int64_t samples) {
  return stability_report("stability-u0", seed, samples, 0, {1, 2, 3, 4, 5, 6},
                        [](const VSample& s, CheckResult& r, const Counterexample& base) {
                          const LocalizedElement f = s.element.reconstruct();
                          const LocalizedElement g = apply_u(0, f);
                          const VMembership m = v_membership(g, 0, 3 * s.n + 1);
                          r.check(m.ok(), with(base, "reason", m.diagnosis));
                          r.check(g == apply_u_by_monomials(0, f), with(base, "reason", "routes disagree"));
                        });
}

VerificationReport property_u1_stability(std::uint64_t seed, std::int64_t samples) {
  return stability_report("stability-u1", seed, samples, 1, {1, 4, 7},
                        [](const VSample& s, CheckResult& r, const Counterexample& base) {
                          const LocalizedElement f = s.element.reconstruct();
                          const LocalizedElement u = apply_u(1, f);
                          const VMembership m = v_membership(u.scaled(Rat(1, 9)), 0, 3 * s.n);
                          r.check(m.ok(), with(base, "reason", m.diagnosis));
                          r.check(u == apply_u_by_monomials(1, f), with(base, "reason", "routes disagree"));
                        });
}

VerificationReport property_composite_stability(std::uint64_t seed, std::int64_t samples) {
  return stability_report("stability-composite", seed, samples, 1, {1, 4, 7},
                        [](const VSample& s, CheckResult& r, const Counterexample& base) {
                          const LocalizedElement f = s.element.reconstruct();
                          const LocalizedElement u = apply_u(1, f);
                          const LocalizedElement g = apply_u(0, u).scaled(Rat(1, 9));
                          const VMembership m = v_membership(g, 1, 9 * s.n + 1);
                          r.check(m.ok(), with(base, "reason", m.diagnosis));
                          r.check(apply_u(0, u) == apply_u_by_monomials(0, u), with(base, "reason", "routes disagree"));
                        });
}

}  // namespace cforge
