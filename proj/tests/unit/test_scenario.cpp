#include <gtest/gtest.h>

#include "covext/bundled.hpp"
#include "covext/errors.hpp"
#include "covext/runner.hpp"
#include "covext/scenario.hpp"

using namespace covext;
using json = nlohmann::json;

namespace {

json minimal_extension_doc() {
  return json::parse(R"({
    "name": "t", "kind": "extension",
    "payload": {
      "g0": {"generators": ["a"]}, "g1": {"generators": ["g"]},
      "rho0": {"images": {"a": [1, 0]}}, "inclusion": {"a": "g"}
    }})");
}

std::string pointer_of(const json& doc) {
  try {
    parse_scenario(doc);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST(Scenario, BundledRoundTripIsIdempotent) {
  ASSERT_GE(bundled_scenarios().size(), 8u);
  for (const auto& b : bundled_scenarios()) {
    const Scenario s = parse_scenario_text(b.text);
    EXPECT_EQ(s.name, b.name);
    const json once = to_json(s);
    EXPECT_EQ(to_json(parse_scenario(once)), once) << b.name;
  }
}

TEST(Scenario, SchemaErrorsPointAtTheField) {
  json d = minimal_extension_doc();
  EXPECT_EQ(pointer_of(d), "<accepted>");
  d["extra"] = 1;
  EXPECT_EQ(pointer_of(d), "/extra");
  d = minimal_extension_doc();
  d["kind"] = "nonsense";
  EXPECT_EQ(pointer_of(d), "/kind");
  d = minimal_extension_doc();
  d["payload"]["inclusion"]["a"] = "h";
  EXPECT_EQ(pointer_of(d), "/payload/inclusion/a");
  d = minimal_extension_doc();
  d["payload"]["rho0"]["images"]["a"] = json::array({0, 0});
  EXPECT_EQ(pointer_of(d), "/payload/rho0/images/a");
  d = minimal_extension_doc();
  d["claims"] = json::parse(R"([{"anchor": "x", "text": "y", "fact": "/b1", "relation": "approx"}])");
  EXPECT_EQ(pointer_of(d), "/claims/0/relation");
  d = minimal_extension_doc();
  d["tolerances"] = {{"lasso_radius_factor", 0.7}};
  EXPECT_EQ(pointer_of(d), "/tolerances/lasso_radius_factor");
  d = minimal_extension_doc();
  d.erase("payload");
  EXPECT_EQ(pointer_of(d), "/payload");
  EXPECT_THROW(parse_scenario_text("{"), SchemaError);
  EXPECT_THROW(load_scenario_file("/nonexistent/file.json"), SchemaError);
}

TEST(Scenario, PointerEscaping) {
  json d = minimal_extension_doc();
  d["payload"]["a/b~c"] = 1;
  EXPECT_EQ(pointer_of(d), "/payload/a~1b~0c");
}

TEST(Claims, VerdictsAreComputed) {
  const json results = {{"b1", 2}, {"x", {1.0, 2.0}}, {"flag", true}};
  Claim c{"A", "t", "/b1", Relation::Eq, json(2), 0.0};
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Matches);
  c.expect = json(3);
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Contradicts);
  c.relation = Relation::Le;
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Matches);
  c.relation = Relation::Ne;
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Matches);
  c = Claim{"A", "t", "/x", Relation::Eq, json({1.0 + 1e-9, 2.0}), 1e-8};
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Matches);
  c.tol = 0.0;
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::Contradicts);
  c.expect.reset();
  EXPECT_EQ(evaluate_claim(c, results, 0), Verdict::NotClaimed);
  c.fact = "/missing";
  EXPECT_THROW(evaluate_claim(c, results, 0), SchemaError);
}

TEST(Runner, ReportShapeAndContradictionIsNotAnError) {
  json d = minimal_extension_doc();
  d["claims"] = json::parse(R"([{"anchor": "x", "text": "y", "fact": "/b1", "expect": 5}])");
  const json report = run_scenario(parse_scenario(d));
  EXPECT_EQ(report["results"]["b1"], 2);
  EXPECT_EQ(report["claims"][0]["verdict"], "CONTRADICTS");
  EXPECT_EQ(report["scenario"]["name"], "t");
  EXPECT_FALSE(report.contains("timings"));
  RunOptions timed;
  timed.timings = true;
  EXPECT_TRUE(run_scenario(parse_scenario(d), timed).contains("timings"));
}

TEST(Runner, DebugTablesAreWritten) {
  std::ostringstream os;
  RunOptions o;
  o.debug_tables = &os;
  run_scenario(parse_scenario(minimal_extension_doc()), o);
  EXPECT_NE(os.str().find("coset table"), std::string::npos);
}

TEST(Runner, SliceErrorsSurfaceAsNumericFailures) {
  const json d = json::parse(R"({"name": "n", "kind": "slice-monodromy",
    "payload": {"cover": [[0, -1], [], [1]], "basepoint": [0, 0]}})");
  EXPECT_THROW(run_scenario(parse_scenario(d)), NumericFailure);
}

TEST(Runner, UnknownLoopLassoIsASchemaError) {
  const json d = json::parse(R"({"name": "n", "kind": "slice-monodromy",
    "payload": {"cover": [[0, -1], [], [1]], "loops": [{"name": "a", "word": "lasso7"}]}})");
  try {
    run_scenario(parse_scenario(d));
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.pointer(), "/payload/loops/0/word");
  }
}

TEST(Runner, HartogsIsSeedDeterministic) {
  const json d = json::parse(R"({"name": "h", "kind": "hartogs-check", "seed": 9,
    "payload": {"n": 3, "q": 2, "r": 0.5, "alpha": 2, "samples": 50, "union_samples": 20}})");
  const Scenario s = parse_scenario(d);
  EXPECT_EQ(run_scenario(s).dump(), run_scenario(s).dump());
  json other = d;
  other["seed"] = 10;
  EXPECT_NE(run_scenario(parse_scenario(other))["results"].dump(), run_scenario(s)["results"].dump());
}

TEST(VerifyPaper, FilterSelectsByName) {
  const PaperSummary s = verify_paper("two_sheet");
  ASSERT_EQ(s.names.size(), 1u);
  EXPECT_EQ(s.names[0], "two_sheet_extension");
  std::ostringstream os;
  print_summary(os, s);
  EXPECT_NE(os.str().find("MATCHES"), std::string::npos);
}
