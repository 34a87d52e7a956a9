#include <cmath>
#include <fstream>
#include <limits>

#include <gtest/gtest.h>

#include "turan/errors.hpp"
#include "turan/suites.hpp"

using namespace turan;
using json = nlohmann::json;

namespace {

SuiteReport sample_report() {
  SuiteReport r;
  r.suite = "lemmas";
  r.timestamp = "1970-01-01T00:00:00Z";
  r.config_digest = "0123456789abcdef";
  r.results.push_back({"lemma4.sign", {{"m", std::int64_t(3)}, {"mu", BigRational(1, 3)}}, Status::pass, BigRational(1, 3),
                       std::nullopt});
  r.results.push_back({"kummer.contiguous", {{"a", 0.1}, {"b", 2.5}, {"tag", std::string("x,y")}}, Status::pass, 1e-15,
                       std::nullopt});
  r.results.push_back({"bessel.i3_sandwich", {{"nu", -1.0}, {"u", 0.5}}, Status::pass,
                       std::numeric_limits<double>::infinity(), std::nullopt});
  r.results.push_back({"lemma2", {{"f", std::string("1,2")}}, Status::fail, BigRational(-2, 7),
                       Counterexample{{{"f", std::string("1,2")}}, "negative sum"}});
  r.results.push_back({"pfq.chain_implies_logconcave", {}, Status::hypothesis_violation, std::monostate{}, std::nullopt});
  r.results.push_back({"conjecture1.scan", {{"mu", BigRational(-5, 4)}}, Status::skipped, std::monostate{},
                       std::nullopt});
  return r;
}

json small_config() {
  return json::parse(R"({
    "lemmas": {"samples": 20, "chu_samples": 10, "lemma2_samples": 10, "float_samples": 5},
    "conjecture": {"m_max": 4, "mu": {"values": ["1/2", "2"]}, "alpha": {"values": ["1", "3/2"]},
                   "beta": {"values": ["1/4", "1"]}}
  })");
}

} // namespace

TEST(Grid, ExactRange) {
  const auto a = GridAxis::from_json("nu", json::parse(R"({"min": "-1", "max": "1", "step": "1/2"})"), 100);
  ASSERT_TRUE(a.exact);
  ASSERT_EQ(a.size(), 5u);
  EXPECT_EQ(a.exact_values[1], BigRational(-1, 2));
  EXPECT_EQ(a.values[4], 1.0);
}

TEST(Grid, RealRangeIncludesEndpoint) {
  const auto a = GridAxis::from_json("x", json::parse(R"({"min": 0, "max": 1, "step": 0.1})"), 100);
  EXPECT_FALSE(a.exact);
  EXPECT_EQ(a.size(), 11u);
  EXPECT_THROW(a.require_exact(), ConfigError);
}

TEST(Grid, Rejects) {
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"values": ["1/2", 0.5]})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"min": "0", "max": 1, "step": "1/2"})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"min": "1", "max": "0", "step": "1/2"})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"min": "0", "max": "1", "step": "0"})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"min": "0", "max": "1"})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"values": ["a/b"]})"), 100), ConfigError);
  EXPECT_THROW(GridAxis::from_json("x", json::parse(R"({"min": "0", "max": "100", "step": "1"})"), 50), CapExceeded);
}

TEST(Grid, ProductCapAndOrder) {
  GridSpec g{{GridAxis::list_real("a", {1, 2, 3}), GridAxis::list_real("b", {10, 20})}, 6};
  EXPECT_EQ(g.point_count(), 6u);
  EXPECT_NO_THROW(g.check_cap());
  EXPECT_EQ(g.point(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(g.point(5), (std::vector<std::size_t>{2, 1}));
  g.cap = 5;
  EXPECT_THROW(g.check_cap(), CapExceeded);
}

TEST(Report, RoundTrip) {
  const SuiteReport r = sample_report();
  EXPECT_EQ(parse_json_report(emit_report(r, Format::json)), r);
}

TEST(Report, RationalsAreFractionStrings) {
  const auto j = json::parse(emit_report(sample_report(), Format::json));
  EXPECT_EQ(j["results"][0]["margin"], "1/3");
  EXPECT_EQ(j["results"][0]["params"]["mu"], "1/3");
  EXPECT_EQ(j["results"][0]["status"], "pass");
  EXPECT_EQ(j["results"][2]["margin"], "inf");
  EXPECT_TRUE(j["results"][4]["margin"].is_null());
  EXPECT_EQ(j["summary"]["total"], 6);
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_EQ(j["results"][3]["counterexample"]["detail"], "negative sum");
}

TEST(Report, Csv) {
  const std::string csv = emit_report(sample_report(), Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "check_id,params,status,margin");
  EXPECT_NE(csv.find("\nlemma4.sign,m=3;mu=1/3,pass,1/3\n"), std::string::npos);
  EXPECT_NE(csv.find("\"a=0.1;b=2.5;tag=x,y\""), std::string::npos);
  EXPECT_EQ(emit_report(sample_report(), Format::csv), csv);
}

TEST(Report, RejectsBadInput) {
  EXPECT_THROW(format_from_string("xml"), std::invalid_argument);
  EXPECT_THROW(parse_json_report("{"), std::invalid_argument);
  auto j = json::parse(emit_report(sample_report(), Format::json));
  j["summary"]["pass"] = 99;
  EXPECT_THROW(parse_json_report(j.dump()), std::invalid_argument);
}

TEST(Report, CanonicalOrder) {
  std::vector<CheckResult> rs{{"b", {{"x", 10.0}}, Status::pass, {}, {}},
                              {"a", {{"x", BigRational(2)}}, Status::pass, {}, {}},
                              {"b", {{"x", 9.0}}, Status::pass, {}, {}},
                              {"a", {{"x", BigRational(1, 2)}}, Status::pass, {}, {}}};
  canonical_sort(rs);
  EXPECT_EQ(rs[0].params[0].value, ParamValue(BigRational(1, 2)));
  EXPECT_EQ(rs[1].check_id, "a");
  EXPECT_EQ(rs[2].params[0].value, ParamValue(9.0));
}

TEST(Report, DigestIgnoresTimestamp) {
  const json cfg = effective_config(small_config());
  EXPECT_EQ(config_digest(cfg, "lemmas"), config_digest(effective_config(small_config()), "lemmas"));
  EXPECT_NE(config_digest(cfg, "lemmas"), config_digest(cfg, "bessel"));
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Config, DefaultsMatchShippedFile) {
  std::ifstream in(std::string(TURAN_SOURCE_DIR) + "/configs/default.json");
  ASSERT_TRUE(in);
  EXPECT_EQ(json::parse(in), default_config());
}

TEST(Config, Merge) {
  const json cfg = effective_config(small_config());
  EXPECT_EQ(cfg["lemmas"]["samples"], 20);
  EXPECT_EQ(cfg["lemmas"]["m_max"], 12);
  EXPECT_EQ(cfg["conjecture"]["mu"], json::parse(R"({"values": ["1/2", "2"]})"));
  EXPECT_THROW(effective_config(json::parse(R"({"lemas": {}})")), ConfigError);
  EXPECT_THROW(effective_config(json::parse(R"({"tolerances": {"relative": 0}})")), ConfigError);
  EXPECT_THROW(effective_config(json::array()), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Suites, Selection) {
  EXPECT_EQ(parse_suite_selection("all").size(), list_suites().size());
  EXPECT_EQ(parse_suite_selection("lemmas,bessel,lemmas"), (std::vector<std::string>{"lemmas", "bessel"}));
  EXPECT_THROW(parse_suite_selection("lemmas,nope"), ConfigError);
  try {
    parse_suite_selection("");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_STREQ(e.what(), "no checks selected");
  }
  try {
    run_suite({}, json::object());
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_STREQ(e.what(), "no checks selected");
  }
}

TEST(Suites, ZeroSamplesIsEmpty) {
  auto cfg = json::parse(R"({"lemmas": {"samples": 0, "chu_samples": 0, "lemma2_samples": 0, "float_samples": 0}})");
  EXPECT_THROW(run_suite({"lemmas"}, cfg), ConfigError);
}

TEST(Suites, CapIsEnforced) {
  auto cfg = small_config();
  cfg["cap"] = 5;
  EXPECT_THROW(run_suite({"conjecture"}, cfg), CapExceeded);
  cfg["cap"] = 10;
  cfg["lemmas"]["samples"] = 11;
  EXPECT_THROW(run_suite({"lemmas"}, cfg), CapExceeded);
}

TEST(Suites, MixedAxisRejected) {
  auto cfg = small_config();
  cfg["conjecture"]["mu"] = json::parse(R"({"values": [0.5, 1.0]})");
  EXPECT_THROW(run_suite({"conjecture"}, cfg), ConfigError);
}

TEST(Suites, ParallelEqualsSerial) {
  const auto a = run_suite({"lemmas", "conjecture"}, small_config(), 1);
  const auto b = run_suite({"lemmas", "conjecture"}, small_config(), 4);
  EXPECT_EQ(a.results, b.results);
  EXPECT_EQ(a.config_digest, b.config_digest);
  EXPECT_EQ(a.summary().fail, 0u);
  EXPECT_EQ(a.suite, "lemmas,conjecture");
}

TEST(Suites, ConjectureOutsideRegion) {
  auto cfg = small_config();
  cfg["conjecture"]["mu"] = json::parse(R"({"values": ["-3/2", "-1/2", "1"]})");
  cfg["conjecture"]["alpha"] = json::parse(R"({"values": ["1/4"]})");
  const auto r = conjecture_scan(cfg);
  std::size_t hv = 0, floating = 0;
  for (const auto& c : r.results) {
    if (c.check_id != "conjecture1.scan") continue;
    const auto mu = std::get<BigRational>(c.params[0].value);
    if (mu < BigRational(-1) || mu + BigRational(1, 4) < BigRational(0)) {
      EXPECT_EQ(c.status, Status::hypothesis_violation);
      ++hv;
    } else if (mu.sign() <= 0) {
      ++floating;
    }
  }
  EXPECT_EQ(hv, 4u);
  EXPECT_EQ(floating, 0u);
}

TEST(Suites, FailingTaskBecomesResult) {
  std::vector<Task> tasks{{"t.throw", {}, [] () -> CheckResult { throw std::runtime_error("boom"); }},
                          {"t.pre", {}, [] () -> CheckResult { throw PreconditionError("pre"); }},
                          {"t.nc", {}, [] () -> CheckResult { throw NonConvergenceError("nc"); }}};
  const auto rs = run_tasks(tasks, 2);
  EXPECT_EQ(rs[0].status, Status::fail);
  ASSERT_TRUE(rs[0].counterexample);
  EXPECT_EQ(rs[1].status, Status::hypothesis_violation);
  EXPECT_EQ(rs[2].status, Status::skipped);
}
