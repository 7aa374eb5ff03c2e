// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/cli/run.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cforge/cli/report_io.hpp"
#include "cforge/cusp/cusp.hpp"
#include "cforge/engine/congruence.hpp"
#include "cforge/engine/cusp_checks.hpp"
#include "cforge/engine/l_series.hpp"
#include "cforge/engine/properties.hpp"
#include "cforge/engine/relations.hpp"
#include "cforge/engine/stability.hpp"
#include "cforge/engine/tables.hpp"
#include "cforge/series/eta.hpp"

namespace cforge::cli {
namespace {

struct RunConfig {
  std::int64_t alpha_max = 0;
  std::int64_t terms = 0;
  std::int64_t n_max = 0;
  std::int64_t m_max = 0;
  std::optional<std::int64_t> r_max;
  std::int64_t cases = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  ReportFormat format = ReportFormat::json;
};

// Usage errors raised after parsing (bad cusp text, bad exponent list, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VerificationReport combine(std::string task, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.task = std::move(task);
  for (const auto& p : parts) {
    out.passed = out.passed && p.passed;
    out.instances += p.instances;
    out.failures += p.failures;
    for (const auto& cx : p.counterexamples)
      if (out.counterexamples.size() < CheckResult::kMaxStored) out.counterexamples.push_back(cx);
    for (const auto& [k, v] : p.params) out.add_param(p.task + "." + k, v);
    for (const auto& r : p.rows) out.rows.push_back({p.task + ": " + r.name, r.passed, r.detail});
    out.elapsed_ms += p.elapsed_ms;
  }
  return out;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw UsageError("cannot open " + cfg.out_path);
  file << text;
}

int emit(const RunConfig& cfg, const VerificationReport& report, std::ostream& out) {
  write_output(cfg, emit_report(report, cfg.format), out);
  return report.passed ? kExitPass : kExitFail;
}

// Plain coefficient listing for the series utilities.
int emit_series(const RunConfig& cfg, const std::string& task, const QSeries& s, std::ostream& out) {
  const std::int64_t from = s.is_zero() ? s.precision() : s.valuation();
  const auto coeffs = s.coefficients(from, s.precision());
  if (cfg.format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    doc["task"] = task;
    doc["valuation"] = from;
    doc["precision"] = s.precision();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    doc["coefficients"] = std::move(arr);
    write_output(cfg, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs.size(); ++k) os << from + static_cast<std::int64_t>(k) << ' ' << coeffs[k].get_str() << '\n';
    write_output(cfg, os.str(), out);
  }
  return kExitPass;
}

EtaQuotient parse_quotient(std::int64_t level, const std::string& exps, std::int64_t scale) {
  EtaQuotient q{level, {}, scale};
  try {
    q.exponents = parse_exponents(exps);
    q.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad eta quotient: ") + e.what());
  }
  return q;
}

Cusp parse_cusp(const std::string& text) {
  try {
    return Cusp::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad cusp '" + text + "': " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the 3-adic congruence family for 2-elongated plane partitions", "congruence-forge"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> action;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the output to this file");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ReportFormat>{{"json", ReportFormat::json},
                                                                                {"text", ReportFormat::text}}));
  };
  // Options share RunConfig slots across subcommands, so defaults are applied when read.
  auto positive = [](CLI::App* sub, const std::string& name, std::int64_t& target, std::int64_t def,
                     const std::string& help) {
    CLI::Option* opt = sub->add_option(name, target, help + " (default " + std::to_string(def) + ")")
                           ->check(CLI::PositiveNumber);
    return [opt, &target, def] { return opt->count() > 0 ? target : def; };
  };
  auto verify_cmd = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    common(sub);
    return sub;
  };

  // verify
  CLI::App* verify = app.add_subcommand("verify", "Run a verification pipeline and emit a report");
  verify->require_subcommand(1);
  {
    CLI::App* s = verify_cmd(verify, "congruence", "3^beta divides d_2 on the arithmetic progressions");
    const auto alpha_max = positive(s, "--alpha-max", cfg.alpha_max, 6, "Largest alpha");
    const auto cases = positive(s, "--cases", cfg.cases, 50, "Progression terms per alpha");
    s->callback([&, alpha_max, cases] { action = [&] { return emit(cfg, check_congruence_direct(alpha_max(), cases()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "fundamental", "The six fundamental relations as q-series identities");
    const auto terms = positive(s, "--terms", cfg.terms, 100, "Series precision");
    s->callback([&, terms] { action = [&] { return emit(cfg, verify_fundamental_relations(terms()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "initial", "The 18 initial relations per parity");
    const auto terms = positive(s, "--terms", cfg.terms, 100, "Series precision");
    s->callback([&, terms] { action = [&] { return emit(cfg, verify_initial_relations(terms()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "modeq", "Modular equations for x and z");
    const auto terms = positive(s, "--terms", cfg.terms, 200, "Series precision");
    s->callback([&, terms] { action = [&] { return emit(cfg, verify_modular_equations(terms()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "lemmas", "Exponent inequalities and exponent tables");
    const auto m_max = positive(s, "--m-max", cfg.m_max, 60, "Largest m");
    s->add_option("--r-max", cfg.r_max, "Largest r (default 60)")->check(CLI::PositiveNumber);
    s->callback([&, m_max] { action = [&] { return emit(cfg, verify_exponent_lemmas(m_max(), cfg.r_max.value_or(60)), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "h-congruences", "Shape, divisibility and congruences of the h arrays");
    const auto n_max = positive(s, "--n-max", cfg.n_max, 10, "Largest family index n");
    const auto m_max = positive(s, "--m-max", cfg.m_max, 9, "Largest m");
    s->add_option("--r-max", cfg.r_max, "Largest r (default: full degree)")->check(CLI::PositiveNumber);
    s->callback([&, n_max, m_max] { action = [&] { return emit(cfg, verify_h_arrays(n_max(), m_max(), cfg.r_max.value_or(-1)), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "that", "Composite linear forms in s(1..15)");
    s->callback([&] { action = [&] { return emit(cfg, verify_that_forms(), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "stability", "Iterate f_alpha and check membership and series agreement");
    const auto alpha_max = positive(s, "--alpha-max", cfg.alpha_max, 5, "Largest alpha");
    s->add_option("--terms", cfg.terms, "Series precision (default: chosen from the numerator degree)")
        ->check(CLI::PositiveNumber);
    s->callback([&, alpha_max] { action = [&] { return emit(cfg, stability_iteration(alpha_max(), cfg.terms), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "u3-contract", "Pole bounds behind the fundamental relations");
    const auto terms = positive(s, "--terms", cfg.terms, 100, "Series precision");
    s->callback([&, terms] { action = [&] { return emit(cfg, verify_u3_contract(terms()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "l1", "Rational representation of L_1");
    const auto terms = positive(s, "--terms", cfg.terms, 200, "Series precision");
    s->callback([&, terms] { action = [&] { return emit(cfg, verify_l1_representation(terms()), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "cusp-orders", "Cusp orders of A, x, x(3tau), z(3tau) on X_0(18)");
    s->callback([&] { action = [&] { return emit(cfg, verify_cusp_orders(), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "radu", "Order lower bounds for L_1 on X_0(6)");
    s->callback([&] { action = [&] { return emit(cfg, verify_radu_bounds(), out); }; });
  }
  {
    CLI::App* s = verify_cmd(verify, "properties", "Randomized property suites");
    s->add_option("--seed", cfg.seed, "Sampling seed");
    const auto cases = positive(s, "--cases", cfg.cases, 200, "Samples per suite");
    s->callback([&, cases] {
      action = [&] {
        const auto n = cases();
        return emit(cfg,
                    combine("properties", {property_series_ring(cfg.seed, n), property_u3(cfg.seed, n),
                                           property_order_additivity(cfg.seed, n), property_degree_zero(cfg.seed, n),
                                           property_u0_stability(cfg.seed, n), property_u1_stability(cfg.seed, n),
                                           property_composite_stability(cfg.seed, n)}),
                    out);
      };
    });
  }

  // series
  CLI::App* series = app.add_subcommand("series", "Print q-series coefficients");
  series->require_subcommand(1);
  std::int64_t k_value = 2;
  std::int64_t level = 6;
  std::int64_t scale = 1;
  std::string exps;
  {
    CLI::App* s = series->add_subcommand("dk", "D_k(q) = (q^2;q^2)^k / (q;q)^(3k+1)");
    common(s);
    s->add_option("--k", k_value, "k")->check(CLI::NonNegativeNumber);
    const auto terms = positive(s, "--terms", cfg.terms, 20, "Number of coefficients");
    s->callback([&, terms] { action = [&] { return emit_series(cfg, "dk", dk_series(k_value, terms()), out); }; });
  }
  {
    CLI::App* s = series->add_subcommand("l-alpha", "L_alpha, built both directly and by iteration");
    common(s);
    s->add_option("--alpha", cfg.alpha_max, "alpha")->required()->check(CLI::NonNegativeNumber);
    const auto terms = positive(s, "--terms", cfg.terms, 20, "Number of coefficients");
    s->callback([&, terms] {
      action = [&] {
        try {
          return emit_series(cfg, "l-alpha", l_series(cfg.alpha_max, terms()), out);
        } catch (const SeriesMismatch& e) {
          err << e.what() << '\n';
          return kExitFail;
        }
      };
    });
  }
  {
    CLI::App* s = series->add_subcommand("eta", "Expansion of an eta quotient");
    common(s);
    s->add_option("--level", level, "Level")->check(CLI::PositiveNumber);
    s->add_option("--exp", exps, "Exponents, e.g. 1=-5,2=1,3=-1,6=5")->required();
    s->add_option("--scale", scale, "tau -> scale*tau")->check(CLI::PositiveNumber);
    const auto terms = positive(s, "--terms", cfg.terms, 20, "Series precision");
    s->callback([&, terms] {
      action = [&] {
        const EtaQuotient q = parse_quotient(level, exps, scale);
        try {
          return emit_series(cfg, "eta", eta_quotient_series(q, terms()), out);
        } catch (const SeriesError& e) {
          throw UsageError(e.what());
        }
      };
    });
  }

  // cusp
  CLI::App* cusp = app.add_subcommand("cusp", "Cusps of X_0(N)");
  cusp->require_subcommand(1);
  std::string first, second;
  {
    CLI::App* s = cusp->add_subcommand("list", "One representative per cusp, with widths");
    s->add_option("--out", cfg.out_path, "Write the output to this file");
    s->add_option("--level", level, "N")->required()->check(CLI::PositiveNumber);
    s->callback([&] {
      action = [&] {
        std::ostringstream os;
        for (const Cusp& c : cusps_of(level)) os << c.to_string() << " width " << cusp_width(c, level) << '\n';
        write_output(cfg, os.str(), out);
        return kExitPass;
      };
    });
  }
  {
    CLI::App* s = cusp->add_subcommand("equiv", "Decide equivalence of two cusps");
    s->add_option("--out", cfg.out_path, "Write the output to this file");
    s->add_option("--level", level, "N")->required()->check(CLI::PositiveNumber);
    s->add_option("first", first, "a/c")->required();
    s->add_option("second", second, "a/c")->required();
    s->callback([&] {
      action = [&] {
        const bool eq = cusp_equivalent(parse_cusp(first), parse_cusp(second), level);
        write_output(cfg, std::string(eq ? "equivalent" : "inequivalent") + "\n", out);
        return kExitPass;
      };
    });
  }

  // eta
  CLI::App* eta = app.add_subcommand("eta", "Eta-quotient orders and criteria");
  eta->require_subcommand(1);
  std::string cusp_text = "inf";
  std::string prefactor_q;
  std::string gen_text, pre_text;
  std::int64_t sieve_m = 3, sieve_t = 0;
  auto quotient_options = [&](CLI::App* s) {
    s->add_option("--out", cfg.out_path, "Write the output to this file");
    s->add_option("--level", level, "Level")->check(CLI::PositiveNumber);
    s->add_option("--exp", exps, "Exponents, e.g. 1=-5,2=1,3=-1,6=5")->required();
    s->add_option("--scale", scale, "tau -> scale*tau")->check(CLI::PositiveNumber);
  };
  {
    CLI::App* s = eta->add_subcommand("order", "Ligozat order at one cusp");
    quotient_options(s);
    s->add_option("--cusp", cusp_text, "Cusp a/c or inf");
    s->add_option("--prefactor-q", prefactor_q, "Expected q-prefactor exponent; checked against the quotient");
    s->callback([&] {
      action = [&] {
        const EtaQuotient q = parse_quotient(level, exps, scale);
        const Cusp c = parse_cusp(cusp_text);
        if (!prefactor_q.empty()) {
          Rat want;
          try {
            want = parse_rational(prefactor_q);
          } catch (const std::exception&) {
            throw UsageError("bad --prefactor-q '" + prefactor_q + "'");
          }
          if (want != q.q_prefactor()) {
            err << "q-prefactor is " << q.q_prefactor().get_str() << ", not " << want.get_str() << '\n';
            return kExitFail;
          }
        }
        Rat ord;
        try {
          ord = ligozat_order(q.rescaled_at(level * scale), c);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        write_output(cfg, ord.get_str() + "\n", out);
        return kExitPass;
      };
    });
  }
  {
    CLI::App* s = eta->add_subcommand("newman", "Newman's modularity criterion");
    quotient_options(s);
    s->callback([&] {
      action = [&] {
        const NewmanBreakdown b = newman_is_modular(parse_quotient(level, exps, scale));
        std::ostringstream os;
        os << "weight_zero " << b.weight_zero << "\nsum_delta_r " << b.sum_delta_r << "\nsum_cofactor_r "
           << b.sum_cofactor_r << "\nsquare_product " << b.square_product << "\nmodular " << b.modular() << '\n';
        write_output(cfg, os.str(), out);
        return b.modular() ? kExitPass : kExitFail;
      };
    });
  }
  {
    CLI::App* s = eta->add_subcommand("radu-bound", "Order lower bound for a sifted eta-quotient series");
    s->add_option("--out", cfg.out_path, "Write the output to this file");
    s->add_option("--level", level, "Level N of the result")->check(CLI::PositiveNumber);
    s->add_option("--gen", gen_text, "Generating function exponents, e.g. 1=-7,2=2")->required();
    s->add_option("--m", sieve_m, "Sieve modulus")->check(CLI::PositiveNumber);
    s->add_option("--t", sieve_t, "Sieve residue")->check(CLI::NonNegativeNumber);
    s->add_option("--prefactor", pre_text, "Prefactor exponents, e.g. 3=7,6=-2");
    s->add_option("--cusp", cusp_text, "Cusp a/c or inf");
    s->callback([&] {
      action = [&] {
        std::map<std::int64_t, std::int64_t> gen, pre;
        try {
          gen = parse_exponents(gen_text);
          if (!pre_text.empty()) pre = parse_exponents(pre_text);
        } catch (const std::exception& e) {
          throw UsageError(std::string("bad exponent list: ") + e.what());
        }
        Rat bound;
        try {
          bound = radu_lower_bound(gen, sieve_m, sieve_t, pre, parse_cusp(cusp_text), level);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        write_output(cfg, bound.get_str() + "\n", out);
        return kExitPass;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cforge::cli
