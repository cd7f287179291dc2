#include "cond3/suites.h"

#include <gtest/gtest.h>

#include "cond3/report_io.h"
#include "json.hpp"

namespace cond3 {
namespace {

SuiteConfig Small(const std::string& suite) {
  SuiteConfig c;
  c.suites = {suite};
  c.f_min = 1;
  c.f_max = 2;
  c.toggle_sweep = "first";
  return c;
}

TEST(SuitesTest, RejectsBadConfig) {
  SuiteConfig c = Small("qgroup");
  c.suites = {"nope"};
  EXPECT_THROW(run_suites(c), std::invalid_argument);
  c = Small("qgroup");
  c.f_max = 0;
  EXPECT_THROW(run_suites(c), std::invalid_argument);
  c = Small("qgroup");
  c.toggle_sweep = "third";
  EXPECT_THROW(run_suites(c), std::invalid_argument);
}

TEST(SuitesTest, OrderedBySuiteThenFThenId) {
  SuiteConfig c = Small("qgroup");
  c.suites = {"dalg", "qgroup"};
  c.toggle_sweep = "both";
  Report r = run_suites(c);
  ASSERT_FALSE(r.checks().empty());
  EXPECT_EQ(r.checks().front().id.substr(0, 7), "qgroup.");
  bool in_dalg = false;
  for (std::size_t i = 1; i < r.checks().size(); ++i) {
    const Check &a = r.checks()[i - 1], &b = r.checks()[i];
    in_dalg = in_dalg || b.id.substr(0, 5) == "dalg.";
    if (in_dalg) EXPECT_EQ(b.id.substr(0, 5), "dalg.");
    if (a.id.substr(0, 4) == b.id.substr(0, 4)) EXPECT_TRUE(a.f < b.f || (a.f == b.f && a.id <= b.id)) << b.id;
  }
}

TEST(SuitesTest, ToggleIndependentChecksRunOnce) {
  SuiteConfig c = Small("dalg");
  c.f_max = 1;
  c.toggle_sweep = "both";
  Report r = run_suites(c);
  int skew = 0, witness = 0;
  for (const Check& ch : r.checks()) {
    skew += ch.id == "dalg.skew.associative";
    witness += ch.id == "dalg.witness.s8";
  }
  EXPECT_EQ(skew, 1);
  EXPECT_EQ(witness, 8);
}

TEST(SuitesTest, ResourceBoundBecomesSkip) {
  SuiteConfig c = Small("ellpt");
  c.f_max = 1;
  c.lefschetz_max_degree = 8;
  Report r = run_suites(c);
  EXPECT_TRUE(r.ok()) << (r.first_failure() ? r.first_failure()->id : "");
  bool bound = false;
  for (const Check& ch : r.checks())
    bound = bound || (ch.verdict == Verdict::kSkip && ch.reason.find("resource bound") != std::string::npos);
  EXPECT_TRUE(bound);
}

TEST(SuitesTest, AggregateEqualsSumOfSuites) {
  SuiteConfig all = Small("qgroup");
  all.suites = {"qgroup", "chars"};
  Report r = run_suites(all);
  Report q = run_suites(Small("qgroup")), ch = run_suites(Small("chars"));
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kSkip})
    EXPECT_EQ(r.count(v), q.count(v) + ch.count(v));
}

TEST(ReportIoTest, JsonSchemaAndDeterminism) {
  SuiteConfig c = Small("qgroup");
  c.jobs = 3;
  std::string a = report_json(c, c.suites, run_suites(c));
  c.jobs = 1;
  std::string b = report_json(c, c.suites, run_suites(c));
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["config"]["f_max"], 2);
  ASSERT_TRUE(j["checks"].is_array());
  for (const char* k : {"id", "anchor", "f", "inputs", "expected", "computed", "verdict", "ms"})
    EXPECT_TRUE(j["checks"][0].contains(k)) << k;
  EXPECT_EQ(j["checks"][0]["ms"], 0);
  int pass = 0;
  for (const auto& ch : j["checks"]) pass += ch["verdict"] == "pass";
  EXPECT_EQ(j["summary"]["pass"], pass);
}

TEST(ReportIoTest, SkipCarriesReasonAndExactValuesAreCanonical) {
  Report r;
  r.skip("x.y", "statement", 1, "f=1", "why");
  r.expect_eq("x.z", "statement", 1, "f=1", CycNum::Rational(-1, 2), CycNum::Rational(-1, 2));
  SuiteConfig c;
  auto j = nlohmann::json::parse(report_json(c, {"qgroup"}, r));
  EXPECT_EQ(j["checks"][0]["verdict"], "skip(why)");
  EXPECT_EQ(j["checks"][1]["computed"], CycNum::Rational(-1, 2).str());
  std::string md = report_markdown(c, {"qgroup"}, r);
  EXPECT_NE(md.find("## x.y"), std::string::npos);
  EXPECT_NE(md.find("skip(why)"), std::string::npos);
}

}  // namespace
}  // namespace cond3
