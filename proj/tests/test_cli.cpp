// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cforge/cli/report_io.hpp"
#include "cforge/cli/run.hpp"

namespace cforge::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EtaOrderOfX) {
  const Result r = invoke({"eta", "order", "--level", "6", "--exp", "1=-5,2=1,3=-1,6=5", "--scale", "1", "--cusp", "0/1",
                           "--prefactor-q", "1"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(invoke({"eta", "order", "--exp", "1=-5,2=1,3=-1,6=5", "--prefactor-q", "2"}).code, kExitFail);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "congruence", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "congruence", "--alpha-max", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "modeq", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eta", "order", "--exp", "1=-5", "--cusp", "x/y"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eta", "order", "--exp", "5=1"}).code, kExitUsage);
}

TEST(Cli, CongruenceReportRoundTrip) {
  const Result r = invoke({"verify", "congruence", "--alpha-max", "3", "--cases", "50"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.at("status"), "pass");
  EXPECT_TRUE(doc.at("counterexamples").empty());
  EXPECT_EQ(doc.at("params").at("alpha_max"), "3");
  const VerificationReport back = report_from_json(doc);
  EXPECT_EQ(report_to_json(back), doc);
}

TEST(Cli, FailingReportCarriesCounterexamples) {
  VerificationReport report;
  report.task = "demo";
  CheckResult c;
  c.check(false, {{"check", "x"}, {"value", "123456789012345678901234567890"}, {"ratio", "-7/3"}});
  report.add_row("row", c);
  const auto doc = report_to_json(report);
  EXPECT_EQ(doc.at("status"), "fail");
  EXPECT_EQ(doc.at("counterexamples").at(0).at("value"), "123456789012345678901234567890");
  EXPECT_TRUE(report_from_json(doc).same_content(report));
  EXPECT_NE(emit_report(report, ReportFormat::text).find("FAIL"), std::string::npos);
}

TEST(Cli, FundamentalSixRows) {
  const Result r = invoke({"verify", "fundamental", "--terms", "100", "--format", "text"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("status    pass"), std::string::npos);
  for (const char* name : {"U1(1)", "U1(x)", "U1(x^2)", "U0(1)", "U0(x)", "U0(x^2)"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, OutputFileAndUtilities) {
  const std::string path = ::testing::TempDir() + "cforge_cli_report.json";
  ASSERT_EQ(invoke({"verify", "radu", "--out", path}).code, kExitPass);
  std::ifstream in(path);
  const auto doc = nlohmann::ordered_json::parse(in);
  EXPECT_EQ(doc.at("task"), "radu-bounds");
  std::remove(path.c_str());

  const Result cusps = invoke({"cusp", "list", "--level", "6"});
  EXPECT_EQ(cusps.out, "inf width 1\n0/1 width 6\n1/2 width 3\n1/3 width 2\n");
  EXPECT_EQ(invoke({"cusp", "equiv", "--level", "18", "1/3", "2/3"}).out, "inequivalent\n");
  EXPECT_EQ(invoke({"cusp", "equiv", "--level", "6", "1/3", "2/3"}).out, "equivalent\n");
  EXPECT_EQ(invoke({"series", "dk", "--k", "2", "--terms", "3", "--format", "text"}).out, "0 1\n1 7\n2 33\n");
  EXPECT_EQ(invoke({"eta", "newman", "--level", "18", "--exp", "1=-7,2=2,9=7,18=-2"}).code, kExitPass);
  EXPECT_EQ(invoke({"eta", "radu-bound", "--level", "6", "--gen", "1=-7,2=2", "--m", "3", "--t", "2", "--prefactor",
                    "3=7,6=-2", "--cusp", "0"})
                .out,
            "-4\n");
}

TEST(Cli, SeedReproducibility) {
  const std::vector<std::string> args{"verify", "properties", "--seed", "42", "--cases", "5"};
  auto a = nlohmann::ordered_json::parse(invoke(args).out);
  auto b = nlohmann::ordered_json::parse(invoke(args).out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace cforge::cli
