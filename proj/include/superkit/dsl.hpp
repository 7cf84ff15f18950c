#pragma once

#include <memory>
#include <string>
#include <vector>

#include "superkit/parity.hpp"
#include "superkit/report.hpp"

namespace superkit::dsl {

// Model description language. Grammar sketch:
//
//   stmt       := decl | fielddecl | vfdecl | sfdecl | actiondecl | check ;
//   decl       := ("coord" | "param") IDENT ":" ("even" | "odd") ";" ;
//   fielddecl  := "field" IDENT ":" ("even" | "odd") ";" ;
//   vfdecl     := "vf" IDENT "=" expr ";" ;
//   sfdecl     := "superfield" IDENT "=" expr ";" ;
//   actiondecl := "action" IDENT "=" expr ";" ;
//   check      := "check" ( expr "==" expr
//                         | expr "is_total_derivative"
//                         | "jac" "(" IDENT "=" expr ("," IDENT "=" expr)* ")"
//                           "ber_eq" expr ) ";" ;
//   expr       := mul (("+" | "-") mul)* ;
//   mul        := unary (("*" | "/") unary)* ;
//   unary      := "-" unary | postfix ;
//   postfix    := primary [ "(" expr ")" ] ;
//   primary    := NUMBER | IDENT | "(" expr ")" | "d" "/" "d" "(" IDENT ")"
//               | "D" "[" IDENT ("," IDENT)* "]" "(" expr ")"
//               | "bracket" "(" expr "," expr ")" ;
//
// Fields are function symbols of the even coordinates declared so far.
// "#" starts a line comment. Division requires an invertible even divisor.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Number,
    Ident,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    CoordDeriv,  // d/d(name)
    Berezin,     // D[names](a)
    Bracket,     // bracket(a, b)
    Apply        // a(b) with a an identifier or coordinate derivative
  };
  Kind kind;
  long number = 0;
  std::string name;
  std::vector<std::string> measure;
  ExprPtr a, b;
  int line = 0, col = 0;
};

struct Stmt {
  enum class Kind {
    Coord,
    Param,
    Field,
    Vf,
    Superfield,
    Action,
    CheckEq,
    CheckTotalDeriv,
    CheckBer
  };
  Kind kind;
  std::string name;
  Parity parity = Parity::Even;
  ExprPtr lhs, rhs;
  std::vector<std::pair<std::string, ExprPtr>> transform;  // CheckBer
  int line = 0, col = 0;
};

struct ModelAst {
  std::vector<Stmt> stmts;
};

/// Parse model text; throws Error(ParseError) with position and expected-set
/// diagnostics, or Error(SemanticError) for undeclared names.
ModelAst parse_model(const std::string& text);

/// Canonical rendering; parse-then-print is a fixed point of print.
std::string pretty_print(const ModelAst& ast);
std::string pretty_print(const ExprPtr& e);

/// Execute the model's declarations and run its embedded checks.
Report run_model(const ModelAst& ast, const std::string& name);

/// Parse a single expression (the expr production above).
ExprPtr parse_expression(const std::string& text);

}  // namespace superkit::dsl

namespace superkit {
class Context;
class SuperExpr;
}

namespace superkit::dsl {

/// Evaluate a parsed expression over the declared symbols of a context.
/// Only scalar-valued expressions are supported here; vector fields belong to
/// model files.
SuperExpr eval_scalar(const ExprPtr& e, const Context& ctx);

}  // namespace superkit::dsl
