#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "superkit/superkit.h"

namespace {

std::string expr_str(const sk_expr* e) {
  size_t needed = 0;
  sk_expr_to_string(e, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  REQUIRE(sk_expr_to_string(e, buf.data(), buf.size(), &needed) == SK_OK);
  buf.resize(needed - 1);
  return buf;
}

}  // namespace

TEST_CASE("context, declarations and expression algebra over the C API") {
  sk_context* ctx = nullptr;
  REQUIRE(sk_context_new(&ctx) == SK_OK);

  CHECK(sk_declare(ctx, "t", SK_EVEN, SK_COORDINATE, nullptr, 0) == SK_OK);
  CHECK(sk_declare(ctx, "theta", SK_ODD, SK_COORDINATE, nullptr, 0) == SK_OK);
  CHECK(sk_declare(ctx, "eps", SK_ODD, SK_PARAMETER, nullptr, 0) == SK_OK);
  const char* qargs[] = {"t"};
  CHECK(sk_declare(ctx, "q", SK_EVEN, SK_FUNCTION, qargs, 1) == SK_OK);
  CHECK(sk_declare(ctx, "psi", SK_ODD, SK_FUNCTION, qargs, 1) == SK_OK);

  // duplicate names are rejected with a diagnostic
  CHECK(sk_declare(ctx, "theta", SK_ODD, SK_COORDINATE, nullptr, 0) ==
        SK_ERROR);
  CHECK(std::string(sk_last_error()).find("theta") != std::string::npos);

  sk_expr* phi = nullptr;
  REQUIRE(sk_expr_parse(ctx, "q + theta*psi", &phi) == SK_OK);
  sk_expr* phi2 = nullptr;
  REQUIRE(sk_expr_mul(phi, phi, &phi2) == SK_OK);
  sk_expr* expect = nullptr;
  REQUIRE(sk_expr_parse(ctx, "q*q + 2*q*theta*psi", &expect) == SK_OK);
  int equal = 0;
  CHECK(sk_expr_equal(phi2, expect, &equal) == SK_OK);
  CHECK(equal == 1);

  // theta^2 = 0
  sk_expr* th = nullptr;
  REQUIRE(sk_expr_parse(ctx, "theta", &th) == SK_OK);
  sk_expr* thsq = nullptr;
  REQUIRE(sk_expr_mul(th, th, &thsq) == SK_OK);
  int zero = 0;
  CHECK(sk_expr_is_zero(thsq, &zero) == SK_OK);
  CHECK(zero == 1);

  // left derivative and Berezin integral
  sk_expr* dphi = nullptr;
  REQUIRE(sk_expr_partial(phi, "theta", &dphi) == SK_OK);
  CHECK(expr_str(dphi) == "psi");
  const char* measure[] = {"theta"};
  sk_expr* ber = nullptr;
  REQUIRE(sk_expr_berezin(phi, measure, 1, &ber) == SK_OK);
  CHECK(expr_str(ber) == "psi");

  // invert_even on 1 + theta*eps
  sk_expr* unit = nullptr;
  REQUIRE(sk_expr_parse(ctx, "1 + theta*eps", &unit) == SK_OK);
  sk_expr* inv = nullptr;
  REQUIRE(sk_expr_invert_even(unit, &inv) == SK_OK);
  sk_expr* prod = nullptr;
  REQUIRE(sk_expr_mul(unit, inv, &prod) == SK_OK);
  sk_expr* one = nullptr;
  REQUIRE(sk_expr_parse(ctx, "1", &one) == SK_OK);
  CHECK(sk_expr_equal(prod, one, &equal) == SK_OK);
  CHECK(equal == 1);

  // parse errors surface through sk_last_error
  sk_expr* bad = nullptr;
  CHECK(sk_expr_parse(ctx, "q + ", &bad) == SK_ERROR);
  CHECK(std::string(sk_last_error()).find("expected") != std::string::npos);
  CHECK(sk_expr_parse(ctx, "undeclared_symbol", &bad) == SK_ERROR);

  for (sk_expr* e : {phi, phi2, expect, th, thsq, dphi, ber, unit, inv, prod, one})
    sk_expr_free(e);
  sk_context_free(ctx);
}

TEST_CASE("suites and reports over the C API") {
  size_t needed = 0;
  CHECK(sk_suite_list(nullptr, 0, &needed) == SK_BUFFER_TOO_SMALL);
  std::string names(needed, '\0');
  REQUIRE(sk_suite_list(names.data(), names.size(), &needed) == SK_OK);
  CHECK(names.find("grassmann") != std::string::npos);
  CHECK(names.find("susy-qm") != std::string::npos);
  CHECK(names.find("all") != std::string::npos);

  sk_report* report = nullptr;
  REQUIRE(sk_suite_run("n1-mechanics", 12345, 0, &report) == SK_OK);
  int passed = 0, failed = 0;
  CHECK(sk_report_counts(report, &passed, &failed) == SK_OK);
  CHECK(failed == 0);
  CHECK(passed > 5);

  CHECK(sk_report_render(report, "json", 0, nullptr, 0, &needed) ==
        SK_BUFFER_TOO_SMALL);
  std::string json(needed, '\0');
  REQUIRE(sk_report_render(report, "json", 0, json.data(), json.size(),
                           &needed) == SK_OK);
  CHECK(json.find("\"suite\": \"n1-mechanics\"") != std::string::npos);
  CHECK(sk_report_render(report, "yaml", 0, nullptr, 0, &needed) ==
        SK_INVALID_ARGUMENT);
  sk_report_free(report);

  // perturbed suites must fail
  REQUIRE(sk_suite_run("clifford", 12345, 1, &report) == SK_OK);
  sk_report_counts(report, &passed, &failed);
  CHECK(failed > 0);
  sk_report_free(report);

  CHECK(sk_suite_run("no-such-suite", 0, 0, &report) == SK_ERROR);

  // model text runs its embedded checks
  REQUIRE(sk_model_run_text(
              "coord t: even; coord theta: odd;"
              "vf P = d/d(t);"
              "vf Q = d/d(theta) + (1/4)*theta*d/d(t);"
              "check bracket(Q, Q) == (1/2)*P;",
              "inline", 1, &report) == SK_OK);
  sk_report_counts(report, &passed, &failed);
  CHECK(passed == 1);
  CHECK(failed == 0);
  sk_report_free(report);

  CHECK(sk_model_run_file("/does/not/exist.skm", 1, &report) == SK_ERROR);
}
