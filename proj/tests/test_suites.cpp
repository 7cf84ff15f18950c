#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "superkit/error.hpp"
#include "superkit/suites.hpp"

using namespace superkit;

TEST_CASE("every built-in suite passes") {
  SuiteOptions opts;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    Report r = run_suite(name, opts);
    INFO("suite ", name);
    for (const auto& c : r.checks) {
      INFO(c.id, " -> ", c.status, " ", c.actual);
      CHECK(c.status == "pass");
    }
    CHECK(r.all_passed());
  }
}

TEST_CASE("the aggregate suite covers all sub-suites and passes") {
  Report all = run_suite("all", {});
  CHECK(all.all_passed());
  CHECK(all.checks.size() > 40);
  // at least one negative control per suite
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    std::string prefix = name == "n1-mechanics"      ? "n1."
                         : name == "n2-mechanics"    ? "n2."
                         : name == "super-minkowski" ? "sm."
                                                     : name + ".";
    bool has_neg = false;
    for (const auto& c : all.checks)
      if (c.id.rfind(prefix, 0) == 0 &&
          c.id.find(".neg.") != std::string::npos)
        has_neg = true;
    INFO("suite ", name);
    CHECK(has_neg);
  }
}

TEST_CASE("perturbed mode flips the negative controls to failures") {
  SuiteOptions opts;
  opts.perturb = true;
  Report r = run_suite("n1-mechanics", opts);
  CHECK_FALSE(r.all_passed());
  bool neg_failed = false;
  for (const auto& c : r.checks)
    if (c.id.find(".neg.") != std::string::npos && c.status != "pass")
      neg_failed = true;
  CHECK(neg_failed);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), Error);
}

TEST_CASE("reports render deterministically and validate against the schema") {
  SuiteOptions opts;
  opts.seed = 424242;
  Report a = run_suite("grassmann", opts);
  Report b = run_suite("grassmann", opts);
  std::string ja = render_json(a);
  std::string jb = render_json(b);
  CHECK(ja == jb);  // byte-identical for a fixed seed

  auto parsed = nlohmann::json::parse(ja);
  CHECK(parsed["suite"] == "grassmann");
  CHECK(parsed["passed"].is_number_integer());
  CHECK(parsed["failed"].is_number_integer());
  CHECK(parsed["checks"].is_array());
  for (const auto& c : parsed["checks"]) {
    CHECK(c["id"].is_string());
    CHECK(c["anchor"].is_string());
    CHECK(c["status"].is_string());
    CHECK(c["expected"].is_string());
    CHECK(c["actual"].is_string());
    CHECK(c["ms"].is_number());
    CHECK(c["ms"] == 0.0);  // timings zeroed unless requested
  }
  CHECK(parsed["passed"].get<int>() + parsed["failed"].get<int>() ==
        static_cast<int>(parsed["checks"].size()));

  // the empty report is valid JSON with zero counts
  Report empty;
  empty.suite = "empty";
  auto pe = nlohmann::json::parse(render_json(empty));
  CHECK(pe["checks"].empty());
  CHECK(pe["passed"] == 0);

  // a failing check renders expected and actual forms
  Report fr = run_model_text("coord t: even; check t == t + 1;", "m", {});
  CHECK(fr.failed() == 1);
  std::string text = render_text(fr);
  CHECK(text.find("expected") != std::string::npos);
  auto pf = nlohmann::json::parse(render_json(fr));
  CHECK(pf["checks"][0]["status"] == "fail");
  CHECK(pf["checks"][0]["expected"] != pf["checks"][0]["actual"]);
}

TEST_CASE("model files run their embedded checks") {
  Report r = run_model_text(
      "coord t: even; coord theta: odd;\n"
      "vf P = d/d(t);\n"
      "vf Q = d/d(theta) + (1/4)*theta*d/d(t);\n"
      "check bracket(Q, Q) == (1/2)*P;\n",
      "inline", {});
  CHECK(r.all_passed());
  CHECK_THROWS_AS(run_model_file("/no/such/file.skm", {}), Error);
}
