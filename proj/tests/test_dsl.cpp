#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superkit/dsl.hpp"
#include "superkit/error.hpp"

using namespace superkit;
using dsl::parse_model;
using dsl::pretty_print;
using dsl::run_model;

namespace {

const char* kN1Model = R"(# N=1 mechanics on R^{1|1}
coord t: even;
coord theta: odd;
param eps: odd;
field q: even;
field psi: odd;

vf P = d/d(t);
vf Q = d/d(theta) + (1/4)*theta*d/d(t);
vf Dc = d/d(theta) - (1/4)*theta*d/d(t);

superfield Phi = q + theta*psi;
action L = D[t,theta](-(Dc(Phi)*d/d(t)(Phi)));

check bracket(Q, Q) == (1/2)*P;
check bracket(P, Q) == 0*P;
check bracket(Dc, Q) == 0*P;
check L == (1/4)*d/d(t)(q)*d/d(t)(q) - d/d(t)(psi)*psi;
check eps*Q(Phi) == eps*psi + (1/4)*eps*theta*d/d(t)(q);
check jac(t = t + (1/4)*eps*theta, theta = theta + eps) ber_eq 1;
)";

}  // namespace

TEST_CASE("parsing and the fixed-point pretty printer") {
  dsl::ModelAst ast = parse_model(kN1Model);
  CHECK(ast.stmts.size() == 16);
  std::string once = pretty_print(ast);
  std::string twice = pretty_print(parse_model(once));
  CHECK(once == twice);
}

TEST_CASE("simple parses") {
  auto ast = parse_model(
      "coord t: even; coord theta: odd;"
      "vf Q = d/d(theta) + (1/4)*theta*d/d(t);");
  CHECK(ast.stmts.size() == 3);
  CHECK(ast.stmts[2].kind == dsl::Stmt::Kind::Vf);
  CHECK(pretty_print(ast.stmts[2].lhs) == "d/d(theta) + 1/4*theta*d/d(t)");
}

TEST_CASE("syntax errors carry positions and expectations") {
  try {
    parse_model("coord t even;");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("':'") != std::string::npos);
    CHECK(std::string(e.what()).find("1:9") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_model("check ;"), Error);
  CHECK_THROWS_AS(parse_model("coord t: sideways;"), Error);
}

TEST_CASE("the N=1 model file passes all its checks") {
  Report r = run_model(parse_model(kN1Model), "n1");
  CHECK(r.failed() == 0);
  CHECK(r.passed() == 6);
}

TEST_CASE("semantic errors") {
  // undeclared symbol
  CHECK_THROWS_AS(run_model(parse_model("vf Q = d/d(theta);"), "m"), Error);
  // scalar where a vector field is required
  CHECK_THROWS_AS(
      run_model(parse_model("coord t: even; vf Q = t;"), "m"), Error);
  // mixed-parity vector field definition is rejected at definition time
  CHECK_THROWS_AS(
      run_model(parse_model("coord t: even; coord theta: odd;"
                            "vf Q = d/d(theta) + d/d(t);"),
                "m"),
      Error);
  // vector fields cannot be multiplied
  CHECK_THROWS_AS(
      run_model(parse_model("coord t: even; vf X = d/d(t)*d/d(t);"), "m"),
      Error);
}

TEST_CASE("failing checks set the exit state but keep running") {
  Report r = run_model(parse_model("coord t: even;"
                                   "check t == t + 1;"
                                   "check t == t;"),
                       "m");
  CHECK(r.failed() == 1);
  CHECK(r.passed() == 1);
  CHECK(r.checks[0].status == "fail");
  CHECK(r.checks[0].expected != r.checks[0].actual);
}

TEST_CASE("total-derivative checks in the DSL") {
  Report r = run_model(
      parse_model("coord t: even; field q: even;"
                  "check d/d(t)(q*d/d(t)(q)) is_total_derivative;"),
      "m");
  CHECK(r.failed() == 0);
  Report bad = run_model(
      parse_model("coord t: even; field q: even;"
                  "check d/d(t)(q)*d/d(t)(q) is_total_derivative;"),
      "m");
  CHECK(bad.failed() == 1);
}
