#include "superkit/expr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superkit {

// ------------------------------------------------------------- construction

SuperExpr SuperExpr::zero(const Context& ctx) {
  SuperExpr e;
  e.ctx_ = ctx;
  return e;
}

SuperExpr SuperExpr::constant(const Context& ctx, const Rational& c) {
  SuperExpr e;
  e.ctx_ = ctx;
  if (c != 0) e.terms_.emplace(Monomial{}, c);
  return e;
}

SuperExpr SuperExpr::monomial(const Context& ctx, const Monomial& m,
                              const Rational& c) {
  SuperExpr e;
  e.ctx_ = ctx;
  if (c != 0) e.terms_.emplace(m, c);
  return e;
}

SuperExpr SuperExpr::atom(const Context& ctx, const Atom& a) {
  const SymbolInfo& si = ctx.info(a.sym);
  if (si.kind == SymbolKind::Function) {
    if (a.deriv.size() != si.args.size())
      fail(ErrorCode::Internal, "derivative multi-index size mismatch for '" +
                                    si.name + "'");
  } else if (!a.deriv.empty()) {
    fail(ErrorCode::Internal, "non-function atom with derivative index");
  }
  Monomial m;
  if (si.parity == Parity::Odd)
    m.odd.push_back(a);
  else
    m.even.emplace_back(a, 1u);
  return monomial(ctx, m, Rational(1));
}

SuperExpr SuperExpr::symbol(const Context& ctx, SymbolId id) {
  const SymbolInfo& si = ctx.info(id);
  Atom a{id, std::vector<std::uint32_t>(
                 si.kind == SymbolKind::Function ? si.args.size() : 0, 0u)};
  return atom(ctx, a);
}

// ---------------------------------------------------------------- queries

bool SuperExpr::homogeneous(Parity p) const {
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return false;
  return true;
}

std::optional<Parity> SuperExpr::parity() const {
  if (terms_.empty()) return std::nullopt;
  Parity p = terms_.begin()->first.parity();
  return homogeneous(p) ? std::optional<Parity>(p) : std::nullopt;
}

Rational SuperExpr::scalar_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SuperExpr::is_nilpotent() const {
  for (const auto& [m, c] : terms_)
    if (!m.nilpotent()) return false;
  return true;
}

bool SuperExpr::depends_on(SymbolId id) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [a, k] : m.even)
      if (a.sym == id) return true;
    for (const auto& a : m.odd)
      if (a.sym == id) return true;
  }
  return false;
}

// -------------------------------------------------------------- arithmetic

void SuperExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperExpr::check_same_context(const SuperExpr& a, const SuperExpr& b) {
  if (!a.ctx_.same(b.ctx_))
    fail(ErrorCode::ContextMismatch,
         "operands belong to different contexts");
}

// Detached zeros (default-constructed) adopt the other operand's context.
static bool adopts(const SuperExpr& a, const SuperExpr& b) {
  return a.is_zero() && !a.context().same(b.context());
}

SuperExpr SuperExpr::operator-() const {
  SuperExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SuperExpr operator+(const SuperExpr& a, const SuperExpr& b) {
  if (adopts(a, b)) return b;
  if (adopts(b, a)) return a;
  SuperExpr::check_same_context(a, b);
  SuperExpr r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

SuperExpr operator-(const SuperExpr& a, const SuperExpr& b) {
  return a + (-b);
}

SuperExpr operator*(const Rational& c, const SuperExpr& a) {
  SuperExpr r = a;
  if (c == 0) return SuperExpr::zero(a.context());
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

namespace {

// Merge sorted odd-atom lists (a then b), counting the transpositions needed
// to interleave; returns false when an atom repeats (the product vanishes).
bool merge_odds(const std::vector<Atom>& a, const std::vector<Atom>& b,
                std::vector<Atom>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    } else {
      return false;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return true;
}

void merge_evens(const std::vector<std::pair<Atom, std::uint32_t>>& a,
                 const std::vector<std::pair<Atom, std::uint32_t>>& b,
                 std::vector<std::pair<Atom, std::uint32_t>>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
}

}  // namespace

SuperExpr operator*(const SuperExpr& a, const SuperExpr& b) {
  if (adopts(a, b)) return SuperExpr::zero(b.context());
  if (adopts(b, a)) return SuperExpr::zero(a.context());
  SuperExpr::check_same_context(a, b);
  SuperExpr r = SuperExpr::zero(a.context());
  std::vector<Atom> odd;
  std::vector<std::pair<Atom, std::uint32_t>> even;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = 1;
      if (!merge_odds(ma.odd, mb.odd, odd, sign)) continue;
      merge_evens(ma.even, mb.even, even);
      Monomial m;
      m.even = even;
      m.odd = odd;
      r.add_term(m, ca * cb * sign);
    }
  }
  return r;
}

bool operator==(const SuperExpr& a, const SuperExpr& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!a.context().same(b.context())) return false;
  return a.terms() == b.terms();
}

SuperExpr pow(const SuperExpr& a, unsigned k) {
  SuperExpr r = SuperExpr::constant(a.context(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

// -------------------------------------------------------------- derivations

SuperExpr graded_derivation(
    const SuperExpr& e, Parity dparity,
    const std::function<SuperExpr(const Atom&)>& action) {
  const Context& ctx = e.context();
  SuperExpr result = SuperExpr::zero(ctx);
  for (const auto& [m, c] : e.terms()) {
    // commuting factors: the operator passes only even atoms, no sign
    for (std::size_t i = 0; i < m.even.size(); ++i) {
      SuperExpr da = action(m.even[i].first);
      if (da.is_zero()) continue;
      Monomial rest;
      rest.even = m.even;
      if (rest.even[i].second > 1)
        rest.even[i].second -= 1;
      else
        rest.even.erase(rest.even.begin() + i);
      Monomial tail;
      tail.odd = m.odd;
      SuperExpr term = SuperExpr::monomial(ctx, rest,
                                           c * Rational(m.even[i].second));
      result += term * da * SuperExpr::monomial(ctx, tail, Rational(1));
    }
    // anticommuting factors: sign (-1)^{dparity * (#odd atoms passed)}
    for (std::size_t j = 0; j < m.odd.size(); ++j) {
      SuperExpr da = action(m.odd[j]);
      if (da.is_zero()) continue;
      int sign = (is_odd(dparity) && (j % 2 == 1)) ? -1 : 1;
      Monomial prefix;
      prefix.even = m.even;
      prefix.odd.assign(m.odd.begin(), m.odd.begin() + j);
      Monomial suffix;
      suffix.odd.assign(m.odd.begin() + j + 1, m.odd.end());
      SuperExpr term = SuperExpr::monomial(ctx, prefix, c * sign);
      result += term * da * SuperExpr::monomial(ctx, suffix, Rational(1));
    }
  }
  return result;
}

namespace {

// d(atom)/d(coordinate s): delta for s itself, chain rule through declared
// arguments for function symbols (arguments are even, so no signs arise).
SuperExpr d_atom_by_even(const Context& ctx, const Atom& a, SymbolId s) {
  const SymbolInfo& si = ctx.info(a.sym);
  if (si.kind != SymbolKind::Function)
    return a.sym == s ? SuperExpr::constant(ctx, 1) : SuperExpr::zero(ctx);
  SuperExpr sum = SuperExpr::zero(ctx);
  for (std::size_t i = 0; i < si.args.size(); ++i) {
    SymbolId arg = si.args[i];
    SuperExpr darg =
        d_atom_by_even(ctx, Atom{arg, std::vector<std::uint32_t>(
                                          ctx.info(arg).kind ==
                                                  SymbolKind::Function
                                              ? ctx.info(arg).args.size()
                                              : 0,
                                          0u)},
                       s);
    if (darg.is_zero()) continue;
    Atom bumped = a;
    bumped.deriv[i] += 1;
    sum += darg * SuperExpr::atom(ctx, bumped);
  }
  return sum;
}

}  // namespace

SuperExpr partial(const SuperExpr& e, SymbolId s) {
  const Context& ctx = e.context();
  const SymbolInfo& si = ctx.info(s);
  if (si.kind == SymbolKind::Function)
    fail(ErrorCode::InvalidTarget,
         "cannot take a partial derivative with respect to function symbol '" +
             si.name + "'");
  if (si.parity == Parity::Odd) {
    Atom target{s, {}};
    return graded_derivation(e, Parity::Odd, [&](const Atom& a) {
      return a == target ? SuperExpr::constant(ctx, 1) : SuperExpr::zero(ctx);
    });
  }
  return graded_derivation(e, Parity::Even, [&](const Atom& a) {
    return d_atom_by_even(ctx, a, s);
  });
}

SuperExpr partial_jet(const SuperExpr& e, SymbolId fn, std::uint32_t order) {
  const Context& ctx = e.context();
  const SymbolInfo& si = ctx.info(fn);
  if (si.kind != SymbolKind::Function)
    fail(ErrorCode::InvalidTarget, "'" + si.name + "' is not a field");
  if (si.args.size() != 1)
    fail(ErrorCode::UnsupportedArgument,
         "jet derivatives support single-argument fields only");
  Atom target{fn, {order}};
  return graded_derivation(e, si.parity, [&](const Atom& a) -> SuperExpr {
    if (a == target) return SuperExpr::constant(ctx, 1);
    if (order == 0 && a.sym != fn) {
      const SymbolInfo& ai = ctx.info(a.sym);
      if (ai.kind == SymbolKind::Function) {
        SuperExpr sum = SuperExpr::zero(ctx);
        for (std::size_t i = 0; i < ai.args.size(); ++i) {
          if (ai.args[i] != fn) continue;
          Atom bumped = a;
          bumped.deriv[i] += 1;
          sum += SuperExpr::atom(ctx, bumped);
        }
        return sum;
      }
    }
    return SuperExpr::zero(ctx);
  });
}

// ------------------------------------------------------------- substitution

namespace {

struct SubstEngine {
  const Context& src;
  const Context& target;
  const std::map<SymbolId, SuperExpr>& images;
  bool cross;

  SuperExpr image_of(const Atom& a) const {
    const SymbolInfo& si = src.info(a.sym);
    auto it = images.find(a.sym);
    if (it != images.end()) {
      SuperExpr img = it->second;
      if (si.kind == SymbolKind::Function) {
        for (std::size_t i = 0; i < si.args.size(); ++i) {
          for (std::uint32_t k = 0; k < a.deriv[i]; ++k) {
            if (cross)
              fail(ErrorCode::UnsupportedArgument,
                   "cannot map differentiated field '" + si.name +
                       "' across contexts");
            img = partial(img, si.args[i]);
          }
        }
      }
      return img;
    }
    if (si.kind != SymbolKind::Function || cross) {
      if (cross)
        fail(ErrorCode::ContextMismatch,
             "symbol '" + si.name + "' has no image in the target context");
      return SuperExpr::atom(target, a);
    }
    // Unmapped function symbol: mapped arguments must be of the form
    // arg + nilpotent, reached by a finite Taylor expansion.
    std::vector<SuperExpr> shifts(si.args.size());
    bool any = false;
    for (std::size_t i = 0; i < si.args.size(); ++i) {
      auto ai = images.find(si.args[i]);
      if (ai == images.end()) continue;
      if (cross)
        fail(ErrorCode::ContextMismatch,
             "function symbol '" + si.name +
                 "' has no image in the target context");
      SuperExpr n = ai->second - SuperExpr::symbol(src, si.args[i]);
      if (n.is_zero()) continue;
      if (!n.is_nilpotent())
        fail(ErrorCode::UnsupportedArgument,
             "argument '" + src.info(si.args[i]).name + "' of '" + si.name +
                 "' must map to itself plus a nilpotent correction");
      shifts[i] = n;
      any = true;
    }
    if (!any && !cross) return SuperExpr::atom(target, a);
    SuperExpr result = SuperExpr::atom(src, a);
    for (std::size_t i = 0; i < si.args.size(); ++i) {
      if (shifts[i].is_zero()) continue;
      // Taylor in slot i: every f-atom (f, d) in `result` becomes
      // sum_k f^{(d + k e_i)} n^k / k!.
      SuperExpr expanded = SuperExpr::zero(src);
      for (const auto& [m, c] : result.terms()) {
        // split the unique f-atom out of the monomial; moving an odd atom to
        // the front costs the Koszul sign of its position
        Monomial rest = m;
        Atom fa{};
        Rational cc = c;
        bool found = false;
        for (std::size_t j = 0; j < rest.even.size() && !found; ++j) {
          if (rest.even[j].first.sym == a.sym) {
            fa = rest.even[j].first;
            if (rest.even[j].second > 1)
              rest.even[j].second -= 1;
            else
              rest.even.erase(rest.even.begin() + j);
            found = true;
          }
        }
        for (std::size_t j = 0; j < rest.odd.size() && !found; ++j) {
          if (rest.odd[j].sym == a.sym) {
            fa = rest.odd[j];
            rest.odd.erase(rest.odd.begin() + j);
            if (j % 2 == 1) cc = -cc;
            found = true;
          }
        }
        if (!found)
          fail(ErrorCode::Internal, "lost track of function atom in Taylor");
        SuperExpr restx = SuperExpr::monomial(src, rest, cc);
        SuperExpr npow = SuperExpr::constant(src, 1);
        Rational fact(1);
        for (std::uint32_t k = 0;; ++k) {
          if (k > 0) {
            npow = npow * shifts[i];
            fact *= Rational(k);
            if (npow.is_zero()) break;
          }
          Atom bumped = fa;
          bumped.deriv[i] += k;
          // n is even, so placement is free of signs
          expanded += Rational(1) / fact *
                      (SuperExpr::atom(src, bumped) * npow * restx);
        }
      }
      result = expanded;
    }
    return result;
  }

  SuperExpr run(const SuperExpr& e) const {
    SuperExpr out = SuperExpr::zero(target);
    for (const auto& [m, c] : e.terms()) {
      SuperExpr term = SuperExpr::constant(target, c);
      for (const auto& [a, k] : m.even) term = term * pow(image_of(a), k);
      for (const auto& a : m.odd) term = term * image_of(a);
      out += term;
    }
    return out;
  }
};

void validate_images(const Context& src,
                     const std::map<SymbolId, SuperExpr>& images,
                     const Context& target) {
  for (const auto& [sym, img] : images) {
    const SymbolInfo& si = src.info(sym);
    if (!img.context().same(target) && !img.is_zero())
      fail(ErrorCode::ContextMismatch,
           "image of '" + si.name + "' lives in the wrong context");
    if (!img.homogeneous(si.parity))
      fail(ErrorCode::ParityViolation,
           "image of " + std::string(to_string(si.parity)) + " symbol '" +
               si.name + "' must preserve parity");
  }
}

}  // namespace

SuperExpr substitute(const SuperExpr& e,
                     const std::map<SymbolId, SuperExpr>& images) {
  validate_images(e.context(), images, e.context());
  SubstEngine eng{e.context(), e.context(), images, false};
  return eng.run(e);
}

SuperExpr substitute_into(const SuperExpr& e,
                          const std::map<SymbolId, SuperExpr>& images,
                          const Context& target) {
  validate_images(e.context(), images, target);
  SubstEngine eng{e.context(), target, images, !e.context().same(target)};
  return eng.run(e);
}

// ------------------------------------------------------- Berezin and units

SuperExpr berezin(const SuperExpr& e, std::span<const SymbolId> odd_list) {
  const Context& ctx = e.context();
  for (SymbolId s : odd_list) {
    const SymbolInfo& si = ctx.info(s);
    if (si.parity != Parity::Odd || si.kind == SymbolKind::Function)
      fail(ErrorCode::InvalidMeasure,
           "Berezin measure entry '" + si.name +
               "' is not an odd coordinate or parameter");
  }
  SuperExpr r = e;
  for (SymbolId s : odd_list) r = partial(r, s);
  return r;
}

SuperExpr nilpotent_taylor(const Context& ctx, SymbolId fn,
                           const SuperExpr& arg) {
  const SymbolInfo& si = ctx.info(fn);
  if (si.kind != SymbolKind::Function)
    fail(ErrorCode::InvalidTarget, "'" + si.name + "' is not a function symbol");
  if (si.args.size() != 1)
    fail(ErrorCode::UnsupportedArgument,
         "nilpotent expansion supports single-argument functions only");
  if (!arg.homogeneous(Parity::Even))
    fail(ErrorCode::ParityViolation, "argument of '" + si.name + "' must be even");

  SuperExpr body = SuperExpr::zero(ctx);
  SuperExpr nil = SuperExpr::zero(ctx);
  for (const auto& [m, c] : arg.terms()) {
    if (m.nilpotent())
      nil += SuperExpr::monomial(ctx, m, c);
    else
      body += SuperExpr::monomial(ctx, m, c);
  }
  if (!(body == SuperExpr::symbol(ctx, si.args[0])))
    fail(ErrorCode::UnsupportedArgument,
         "body of the argument must be exactly '" +
             ctx.info(si.args[0]).name + "'");

  SuperExpr result = SuperExpr::zero(ctx);
  SuperExpr npow = SuperExpr::constant(ctx, 1);
  Rational fact(1);
  for (std::uint32_t k = 0;; ++k) {
    if (k > 0) {
      npow = npow * nil;
      fact *= Rational(k);
      if (npow.is_zero()) break;
    }
    result += Rational(1) / fact * (SuperExpr::atom(ctx, Atom{fn, {k}}) * npow);
  }
  return result;
}

SuperExpr invert_even(const SuperExpr& e) {
  if (!e.homogeneous(Parity::Even))
    fail(ErrorCode::ParityViolation, "only even elements can be inverted");
  Rational c = e.scalar_part();
  if (c == 0)
    fail(ErrorCode::NonInvertible, "zero scalar part: element is not a unit");
  SuperExpr n = e - SuperExpr::constant(e.context(), c);
  if (!n.is_nilpotent())
    fail(ErrorCode::NonInvertible,
         "non-scalar part is not nilpotent; cannot invert");
  // (c + n)^-1 = (1/c) sum_k (-n/c)^k, terminating since n is nilpotent
  SuperExpr x = Rational(-1) / c * n;
  SuperExpr sum = SuperExpr::constant(e.context(), 1);
  SuperExpr p = x;
  while (!p.is_zero()) {
    sum += p;
    p = p * x;
  }
  return Rational(1) / c * sum;
}

SuperExpr filter_by_odd_degree(const SuperExpr& e,
                               std::span<const SymbolId> odd_symbols,
                               std::size_t count) {
  std::set<SymbolId> set(odd_symbols.begin(), odd_symbols.end());
  SuperExpr r = SuperExpr::zero(e.context());
  for (const auto& [m, c] : e.terms()) {
    std::size_t n = 0;
    for (const auto& a : m.odd) n += set.count(a.sym);
    if (n == count) r += SuperExpr::monomial(e.context(), m, c);
  }
  return r;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Context& ctx, const Atom& a) {
  const SymbolInfo& si = ctx.info(a.sym);
  std::string s = si.name;
  if (si.kind != SymbolKind::Function) return s;
  std::uint32_t total = 0;
  for (auto d : a.deriv) total += d;
  if (total == 0) return s;
  if (a.deriv.size() == 1) {
    if (total <= 3) {
      s.append(total, '\'');
    } else {
      s += "^(" + std::to_string(total) + ")";
    }
    return s;
  }
  s += "^(";
  for (std::size_t i = 0; i < a.deriv.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.deriv[i]);
  }
  s += ")";
  return s;
}

std::string to_string(const SuperExpr& e) {
  if (e.is_zero()) return "0";
  const Context& ctx = e.context();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    for (const auto& [a, k] : m.even) {
      std::string p = to_string(ctx, a);
      if (k > 1) p += "^" + std::to_string(k);
      parts.push_back(p);
    }
    for (const auto& a : m.odd) parts.push_back(to_string(ctx, a));
    if (parts.empty()) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str() << "*";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "*";
        out << parts[i];
      }
    }
  }
  return out.str();
}

}  // namespace superkit
