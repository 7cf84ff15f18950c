#include "superkit/dsl.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include "superkit/superspace.hpp"
#include "superkit/supermatrix.hpp"

namespace superkit::dsl {

namespace {

// ------------------------------------------------------------------- lexer

struct Token {
  enum class Kind {
    Ident,
    Number,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Semi,
    Assign,
    EqEq,
    End
  };
  Kind kind;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

const char* kind_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::Ident: return "identifier";
    case Token::Kind::Number: return "number";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::LBracket: return "'['";
    case Token::Kind::RBracket: return "']'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Colon: return "':'";
    case Token::Kind::Semi: return "';'";
    case Token::Kind::Assign: return "'='";
    case Token::Kind::EqEq: return "'=='";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, long v = 0) {
    out.push_back({k, std::move(t), v, line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      push(Token::Kind::Ident, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      push(Token::Kind::Number, text.substr(i, j - i),
           std::stol(text.substr(i, j - i)));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto single = [&](Token::Kind k) {
      push(k, std::string(1, c));
      ++col;
      ++i;
    };
    switch (c) {
      case '+': single(Token::Kind::Plus); continue;
      case '-': single(Token::Kind::Minus); continue;
      case '*': single(Token::Kind::Star); continue;
      case '/': single(Token::Kind::Slash); continue;
      case '(': single(Token::Kind::LParen); continue;
      case ')': single(Token::Kind::RParen); continue;
      case '[': single(Token::Kind::LBracket); continue;
      case ']': single(Token::Kind::RBracket); continue;
      case ',': single(Token::Kind::Comma); continue;
      case ':': single(Token::Kind::Colon); continue;
      case ';': single(Token::Kind::Semi); continue;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(Token::Kind::EqEq, "==");
          col += 2;
          i += 2;
        } else {
          single(Token::Kind::Assign);
        }
        continue;
      default:
        fail(ErrorCode::ParseError,
             "unexpected character '" + std::string(1, c) + "' at " +
                 std::to_string(line) + ":" + std::to_string(col));
    }
  }
  push(Token::Kind::End, "");
  return out;
}

// ------------------------------------------------------------------ parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ModelAst parse() {
    ModelAst ast;
    while (!at(Token::Kind::End)) ast.stmts.push_back(statement());
    return ast;
  }

  ExprPtr parse_single_expression() {
    ExprPtr e = expr();
    if (!at(Token::Kind::End)) expected("end of expression");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Token::Kind k) const { return cur().kind == k; }
  bool at_ident(const char* word) const {
    return cur().kind == Token::Kind::Ident && cur().text == word;
  }
  Token advance() { return toks_[pos_++]; }

  [[noreturn]] void expected(const std::string& what) {
    fail(ErrorCode::ParseError,
         "expected " + what + ", found " +
             (cur().kind == Token::Kind::Ident ? "'" + cur().text + "'"
                                               : kind_name(cur().kind)) +
             " at " + std::to_string(cur().line) + ":" +
             std::to_string(cur().col));
  }

  Token eat(Token::Kind k, const std::string& what) {
    if (!at(k)) expected(what);
    return advance();
  }

  std::string ident(const std::string& what) {
    return eat(Token::Kind::Ident, what).text;
  }

  Parity parity_word() {
    std::string w = ident("'even' or 'odd'");
    if (w == "even") return Parity::Even;
    if (w == "odd") return Parity::Odd;
    fail(ErrorCode::ParseError, "expected 'even' or 'odd', found '" + w + "'");
  }

  Stmt statement() {
    Stmt s;
    s.line = cur().line;
    s.col = cur().col;
    if (at_ident("coord") || at_ident("param") || at_ident("field")) {
      std::string kw = advance().text;
      s.kind = kw == "coord"   ? Stmt::Kind::Coord
               : kw == "param" ? Stmt::Kind::Param
                               : Stmt::Kind::Field;
      s.name = ident("a name");
      eat(Token::Kind::Colon, "':'");
      s.parity = parity_word();
      eat(Token::Kind::Semi, "';'");
      return s;
    }
    if (at_ident("vf") || at_ident("superfield") || at_ident("action")) {
      std::string kw = advance().text;
      s.kind = kw == "vf"           ? Stmt::Kind::Vf
               : kw == "superfield" ? Stmt::Kind::Superfield
                                    : Stmt::Kind::Action;
      s.name = ident("a name");
      eat(Token::Kind::Assign, "'='");
      s.lhs = expr();
      eat(Token::Kind::Semi, "';'");
      return s;
    }
    if (at_ident("check")) {
      advance();
      if (at_ident("jac")) {
        advance();
        s.kind = Stmt::Kind::CheckBer;
        eat(Token::Kind::LParen, "'('");
        while (true) {
          std::string coord = ident("a coordinate name");
          eat(Token::Kind::Assign, "'='");
          s.transform.emplace_back(coord, expr());
          if (at(Token::Kind::Comma)) {
            advance();
            continue;
          }
          break;
        }
        eat(Token::Kind::RParen, "')'");
        if (!at_ident("ber_eq")) expected("'ber_eq'");
        advance();
        s.rhs = expr();
        eat(Token::Kind::Semi, "';'");
        return s;
      }
      s.lhs = expr();
      if (at(Token::Kind::EqEq)) {
        advance();
        s.kind = Stmt::Kind::CheckEq;
        s.rhs = expr();
      } else if (at_ident("is_total_derivative")) {
        advance();
        s.kind = Stmt::Kind::CheckTotalDeriv;
      } else {
        expected("'==' or 'is_total_derivative'");
      }
      eat(Token::Kind::Semi, "';'");
      return s;
    }
    expected("'coord', 'param', 'field', 'vf', 'superfield', 'action' or 'check'");
  }

  ExprPtr make(Expr e) {
    e.line = cur().line;
    e.col = cur().col;
    return std::make_shared<Expr>(std::move(e));
  }

  ExprPtr expr() {
    ExprPtr a = mul();
    while (at(Token::Kind::Plus) || at(Token::Kind::Minus)) {
      bool plus = advance().kind == Token::Kind::Plus;
      ExprPtr b = mul();
      Expr e;
      e.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
      e.a = a;
      e.b = b;
      a = make(std::move(e));
    }
    return a;
  }

  ExprPtr mul() {
    ExprPtr a = unary();
    while (at(Token::Kind::Star) || at(Token::Kind::Slash)) {
      bool star = advance().kind == Token::Kind::Star;
      ExprPtr b = unary();
      Expr e;
      e.kind = star ? Expr::Kind::Mul : Expr::Kind::Div;
      e.a = a;
      e.b = b;
      a = make(std::move(e));
    }
    return a;
  }

  ExprPtr unary() {
    if (at(Token::Kind::Minus)) {
      advance();
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.a = unary();
      return make(std::move(e));
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr p = primary();
    // application binds to identifiers and coordinate derivatives
    while (at(Token::Kind::LParen) && (p->kind == Expr::Kind::Ident ||
                                       p->kind == Expr::Kind::CoordDeriv)) {
      advance();
      Expr e;
      e.kind = Expr::Kind::Apply;
      e.a = p;
      e.b = expr();
      eat(Token::Kind::RParen, "')'");
      p = make(std::move(e));
    }
    return p;
  }

  ExprPtr primary() {
    if (at(Token::Kind::Number)) {
      Expr e;
      e.kind = Expr::Kind::Number;
      e.number = advance().value;
      return make(std::move(e));
    }
    if (at(Token::Kind::LParen)) {
      advance();
      ExprPtr inner = expr();
      eat(Token::Kind::RParen, "')'");
      return inner;
    }
    if (at_ident("d") && peek().kind == Token::Kind::Slash &&
        peek(2).kind == Token::Kind::Ident && peek(2).text == "d" &&
        peek(3).kind == Token::Kind::LParen) {
      advance();  // d
      advance();  // /
      advance();  // d
      advance();  // (
      Expr e;
      e.kind = Expr::Kind::CoordDeriv;
      e.name = ident("a coordinate name");
      eat(Token::Kind::RParen, "')'");
      return make(std::move(e));
    }
    if (at_ident("D") && peek().kind == Token::Kind::LBracket) {
      advance();
      advance();
      Expr e;
      e.kind = Expr::Kind::Berezin;
      while (true) {
        e.measure.push_back(ident("a measure symbol"));
        if (at(Token::Kind::Comma)) {
          advance();
          continue;
        }
        break;
      }
      eat(Token::Kind::RBracket, "']'");
      eat(Token::Kind::LParen, "'('");
      e.a = expr();
      eat(Token::Kind::RParen, "')'");
      return make(std::move(e));
    }
    if (at_ident("bracket") && peek().kind == Token::Kind::LParen) {
      advance();
      advance();
      Expr e;
      e.kind = Expr::Kind::Bracket;
      e.a = expr();
      eat(Token::Kind::Comma, "','");
      e.b = expr();
      eat(Token::Kind::RParen, "')'");
      return make(std::move(e));
    }
    if (at(Token::Kind::Ident)) {
      Expr e;
      e.kind = Expr::Kind::Ident;
      e.name = advance().text;
      return make(std::move(e));
    }
    expected("an expression");
  }
};

// ----------------------------------------------------------------- printer

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

void print_expr(std::ostringstream& out, const ExprPtr& e, int parent_prec) {
  int prec = precedence(e->kind);
  bool paren = prec < parent_prec;
  if (paren) out << "(";
  switch (e->kind) {
    case Expr::Kind::Number: out << e->number; break;
    case Expr::Kind::Ident: out << e->name; break;
    case Expr::Kind::Neg:
      out << "-";
      print_expr(out, e->a, prec + 1);
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_expr(out, e->a, prec);
      out << (e->kind == Expr::Kind::Add ? " + " : " - ");
      print_expr(out, e->b, prec + 1);
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_expr(out, e->a, prec);
      out << (e->kind == Expr::Kind::Mul ? "*" : "/");
      print_expr(out, e->b, prec + 1);
      break;
    case Expr::Kind::CoordDeriv: out << "d/d(" << e->name << ")"; break;
    case Expr::Kind::Berezin:
      out << "D[";
      for (std::size_t i = 0; i < e->measure.size(); ++i) {
        if (i) out << ",";
        out << e->measure[i];
      }
      out << "](";
      print_expr(out, e->a, 0);
      out << ")";
      break;
    case Expr::Kind::Bracket:
      out << "bracket(";
      print_expr(out, e->a, 0);
      out << ", ";
      print_expr(out, e->b, 0);
      out << ")";
      break;
    case Expr::Kind::Apply:
      print_expr(out, e->a, 4);
      out << "(";
      print_expr(out, e->b, 0);
      out << ")";
      break;
  }
  if (paren) out << ")";
}

}  // namespace

ModelAst parse_model(const std::string& text) { return Parser(text).parse(); }

ExprPtr parse_expression(const std::string& text) {
  return Parser(text).parse_single_expression();
}

std::string pretty_print(const ExprPtr& e) {
  std::ostringstream out;
  print_expr(out, e, 0);
  return out.str();
}

std::string pretty_print(const ModelAst& ast) {
  std::ostringstream out;
  for (const auto& s : ast.stmts) {
    switch (s.kind) {
      case Stmt::Kind::Coord:
        out << "coord " << s.name << ": " << to_string(s.parity) << ";\n";
        break;
      case Stmt::Kind::Param:
        out << "param " << s.name << ": " << to_string(s.parity) << ";\n";
        break;
      case Stmt::Kind::Field:
        out << "field " << s.name << ": " << to_string(s.parity) << ";\n";
        break;
      case Stmt::Kind::Vf:
        out << "vf " << s.name << " = " << pretty_print(s.lhs) << ";\n";
        break;
      case Stmt::Kind::Superfield:
        out << "superfield " << s.name << " = " << pretty_print(s.lhs)
            << ";\n";
        break;
      case Stmt::Kind::Action:
        out << "action " << s.name << " = " << pretty_print(s.lhs) << ";\n";
        break;
      case Stmt::Kind::CheckEq:
        out << "check " << pretty_print(s.lhs) << " == " << pretty_print(s.rhs)
            << ";\n";
        break;
      case Stmt::Kind::CheckTotalDeriv:
        out << "check " << pretty_print(s.lhs) << " is_total_derivative;\n";
        break;
      case Stmt::Kind::CheckBer: {
        out << "check jac(";
        for (std::size_t i = 0; i < s.transform.size(); ++i) {
          if (i) out << ", ";
          out << s.transform[i].first << " = "
              << pretty_print(s.transform[i].second);
        }
        out << ") ber_eq " << pretty_print(s.rhs) << ";\n";
        break;
      }
    }
  }
  return out.str();
}

// --------------------------------------------------------------- evaluator

namespace {

struct Value {
  bool is_vf = false;
  SuperExpr scalar;
  std::map<SymbolId, SuperExpr> vf;  // coefficients per coordinate
};

struct Evaluator {
  Context ctx;
  std::map<std::string, SymbolId> symbols;
  std::map<std::string, Value> named;  // vf / superfield / action aliases

  [[noreturn]] void err(const Expr& e, const std::string& msg) {
    fail(ErrorCode::SemanticError, msg + " at " + std::to_string(e.line) +
                                       ":" + std::to_string(e.col));
  }

  SuperVectorField finalize_vf(const Value& v, const Expr& where) {
    std::optional<Parity> parity;
    for (const auto& [coord, coeff] : v.vf) {
      if (coeff.is_zero()) continue;
      auto p = coeff.parity();
      if (!p) err(where, "vector field coefficient is not homogeneous");
      Parity field_parity = *p + ctx.info(coord).parity;
      if (parity && *parity != field_parity)
        err(where, "vector field mixes parities");
      parity = field_parity;
    }
    std::map<SymbolId, SuperExpr> coeffs;
    for (const auto& [coord, coeff] : v.vf)
      if (!coeff.is_zero()) coeffs.emplace(coord, coeff);
    return SuperVectorField(ctx, parity.value_or(Parity::Even), coeffs);
  }

  Value eval(const ExprPtr& pe) {
    const Expr& e = *pe;
    switch (e.kind) {
      case Expr::Kind::Number: {
        Value v;
        v.scalar = SuperExpr::constant(ctx, Rational(e.number));
        return v;
      }
      case Expr::Kind::Ident: {
        if (auto it = named.find(e.name); it != named.end()) return it->second;
        if (auto id = ctx.find(e.name)) {
          Value v;
          v.scalar = SuperExpr::symbol(ctx, *id);
          return v;
        }
        err(e, "undeclared symbol '" + e.name + "'");
      }
      case Expr::Kind::Neg: {
        Value v = eval(e.a);
        if (v.is_vf) {
          for (auto& [c, coeff] : v.vf) coeff = -coeff;
        } else {
          v.scalar = -v.scalar;
        }
        return v;
      }
      case Expr::Kind::Add:
      case Expr::Kind::Sub: {
        Value a = eval(e.a);
        Value b = eval(e.b);
        if (a.is_vf != b.is_vf)
          err(e, "cannot add a scalar and a vector field");
        if (!a.is_vf) {
          a.scalar = e.kind == Expr::Kind::Add ? a.scalar + b.scalar
                                               : a.scalar - b.scalar;
          return a;
        }
        for (const auto& [c, coeff] : b.vf) {
          SuperExpr cur = a.vf.count(c) ? a.vf[c] : SuperExpr::zero(ctx);
          a.vf[c] =
              e.kind == Expr::Kind::Add ? cur + coeff : cur - coeff;
        }
        return a;
      }
      case Expr::Kind::Mul: {
        Value a = eval(e.a);
        Value b = eval(e.b);
        if (a.is_vf && b.is_vf)
          err(e, "vector fields do not multiply; use bracket(X, Y)");
        if (!a.is_vf && !b.is_vf) {
          a.scalar = a.scalar * b.scalar;
          return a;
        }
        if (a.is_vf) err(e, "write coefficients to the left of vector fields");
        for (auto& [c, coeff] : b.vf) coeff = a.scalar * coeff;
        return b;
      }
      case Expr::Kind::Div: {
        Value a = eval(e.a);
        Value b = eval(e.b);
        if (b.is_vf) err(e, "cannot divide by a vector field");
        SuperExpr inv;
        try {
          inv = invert_even(b.scalar);
        } catch (const Error& ex) {
          err(e, std::string("divisor is not invertible: ") + ex.what());
        }
        if (a.is_vf) {
          for (auto& [c, coeff] : a.vf) coeff = inv * coeff;
          return a;
        }
        a.scalar = a.scalar * inv;
        return a;
      }
      case Expr::Kind::CoordDeriv: {
        SymbolId id = lookup_coord(e, e.name);
        Value v;
        v.is_vf = true;
        v.vf[id] = SuperExpr::constant(ctx, 1);
        return v;
      }
      case Expr::Kind::Berezin: {
        Value inner = eval(e.a);
        if (inner.is_vf) err(e, "Berezin integral needs a scalar integrand");
        std::vector<SymbolId> odd;
        for (const auto& nm : e.measure) {
          auto id = ctx.find(nm);
          if (!id) err(e, "undeclared measure symbol '" + nm + "'");
          // even entries are the formal part of the measure (a density in
          // them); only odd entries integrate
          if (ctx.info(*id).parity == Parity::Odd) odd.push_back(*id);
        }
        Value v;
        v.scalar = berezin(inner.scalar, odd);
        return v;
      }
      case Expr::Kind::Bracket: {
        Value a = eval(e.a);
        Value b = eval(e.b);
        if (!a.is_vf || !b.is_vf)
          err(e, "bracket arguments must be vector fields");
        SuperVectorField x = finalize_vf(a, e);
        SuperVectorField y = finalize_vf(b, e);
        SuperVectorField r = superbracket(x, y);
        Value v;
        v.is_vf = true;
        for (const auto& [c, coeff] : r.coeffs()) v.vf[c] = coeff;
        return v;
      }
      case Expr::Kind::Apply: {
        Value f = eval(e.a);
        Value arg = eval(e.b);
        if (!f.is_vf) err(e, "only vector fields can be applied");
        if (arg.is_vf) err(e, "vector fields act on scalars");
        Value v;
        v.scalar = finalize_vf(f, e).apply(arg.scalar);
        return v;
      }
    }
    err(e, "unreachable expression kind");
  }

  SymbolId lookup_coord(const Expr& e, const std::string& name) {
    auto id = ctx.find(name);
    if (!id) err(e, "undeclared coordinate '" + name + "'");
    if (ctx.info(*id).kind != SymbolKind::Coordinate)
      err(e, "'" + name + "' is not a coordinate");
    return *id;
  }
};

std::string value_string(const Evaluator& ev, const Value& v) {
  if (!v.is_vf) return to_string(v.scalar);
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, coeff] : v.vf) {
    if (coeff.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(coeff) << ")*d/d("
        << ev.ctx.info(c).name << ")";
  }
  return first ? "0" : out.str();
}

bool values_equal(const Value& a, const Value& b) {
  if (a.is_vf != b.is_vf) return false;
  if (!a.is_vf) return a.scalar == b.scalar;
  std::map<SymbolId, SuperExpr> da = a.vf, db = b.vf;
  for (const auto& [c, coeff] : db)
    if (!da.count(c)) da[c] = SuperExpr::zero(coeff.context());
  for (const auto& [c, coeff] : da) {
    auto it = db.find(c);
    SuperExpr other =
        it == db.end() ? SuperExpr::zero(coeff.context()) : it->second;
    if (!(coeff == other)) return false;
  }
  return true;
}

}  // namespace

Report run_model(const ModelAst& ast, const std::string& name) {
  Report report;
  report.suite = name;
  Evaluator ev;
  std::vector<SymbolId> even_coords;
  int check_no = 0;

  for (const auto& s : ast.stmts) {
    auto start = std::chrono::steady_clock::now();
    auto finish_check = [&](const std::string& anchor, bool ok,
                            const std::string& expected,
                            const std::string& actual) {
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      report.checks.push_back({name + ":check" + std::to_string(check_no),
                               anchor, ok ? "pass" : "fail", expected, actual,
                               ms});
    };
    try {
      switch (s.kind) {
        case Stmt::Kind::Coord: {
          SymbolId id = ev.ctx.coordinate(s.name, s.parity);
          if (s.parity == Parity::Even) even_coords.push_back(id);
          break;
        }
        case Stmt::Kind::Param:
          ev.ctx.parameter(s.name, s.parity);
          break;
        case Stmt::Kind::Field:
          ev.ctx.function(s.name, s.parity, even_coords);
          break;
        case Stmt::Kind::Vf: {
          Value v = ev.eval(s.lhs);
          if (!v.is_vf)
            fail(ErrorCode::SemanticError,
                 "'" + s.name + "' must be a vector field");
          ev.finalize_vf(v, *s.lhs);  // homogeneity check at definition time
          ev.named[s.name] = v;
          break;
        }
        case Stmt::Kind::Superfield:
        case Stmt::Kind::Action: {
          Value v = ev.eval(s.lhs);
          if (v.is_vf)
            fail(ErrorCode::SemanticError,
                 "'" + s.name + "' must be a scalar expression");
          ev.named[s.name] = v;
          break;
        }
        case Stmt::Kind::CheckEq: {
          ++check_no;
          Value lhs = ev.eval(s.lhs);
          Value rhs = ev.eval(s.rhs);
          finish_check(pretty_print(s.lhs) + " == " + pretty_print(s.rhs),
                       values_equal(lhs, rhs), value_string(ev, rhs),
                       value_string(ev, lhs));
          break;
        }
        case Stmt::Kind::CheckTotalDeriv: {
          ++check_no;
          Value lhs = ev.eval(s.lhs);
          if (lhs.is_vf)
            fail(ErrorCode::SemanticError,
                 "is_total_derivative needs a scalar density");
          bool ok = is_total_derivative(lhs.scalar);
          finish_check(pretty_print(s.lhs) + " is_total_derivative", ok,
                       "a total derivative", to_string(lhs.scalar));
          break;
        }
        case Stmt::Kind::CheckBer: {
          ++check_no;
          std::map<SymbolId, SuperExpr> transform;
          for (const auto& [coord, image] : s.transform) {
            SymbolId id = ev.ctx.require(coord);
            Value v = ev.eval(image);
            if (v.is_vf)
              fail(ErrorCode::SemanticError,
                   "coordinate images must be scalars");
            transform[id] = v.scalar;
          }
          Value rhs = ev.eval(s.rhs);
          std::vector<SymbolId> coords = ev.ctx.coordinates();
          SuperExpr ber = berezinian(jacobian(ev.ctx, transform, coords));
          std::ostringstream anchor;
          anchor << "Ber(jac(...)) == " << pretty_print(s.rhs);
          finish_check(anchor.str(), ber == rhs.scalar,
                       to_string(rhs.scalar), to_string(ber));
          break;
        }
      }
    } catch (const Error& ex) {
      if (s.kind == Stmt::Kind::CheckEq || s.kind == Stmt::Kind::CheckTotalDeriv ||
          s.kind == Stmt::Kind::CheckBer) {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        report.checks.push_back({name + ":check" + std::to_string(check_no),
                                 "statement at " + std::to_string(s.line) +
                                     ":" + std::to_string(s.col),
                                 "error", "", ex.what(), ms});
      } else {
        throw;
      }
    }
  }
  return report;
}

SuperExpr eval_scalar(const ExprPtr& e, const Context& ctx) {
  Evaluator ev;
  ev.ctx = ctx;
  Value v = ev.eval(e);
  if (v.is_vf)
    fail(ErrorCode::SemanticError,
         "expression is vector-field valued, expected a scalar");
  return v.scalar;
}

}  // namespace superkit::dsl
