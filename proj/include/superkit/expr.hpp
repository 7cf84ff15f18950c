#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superkit/context.hpp"
#include "superkit/rational.hpp"

namespace superkit {

/// One occurrence of a symbol inside a monomial. For function symbols the
/// derivative multi-index runs over the declared arguments (q with deriv {2}
/// is the second time-derivative of q). Coordinates and parameters carry an
/// empty multi-index.
struct Atom {
  SymbolId sym = 0;
  std::vector<std::uint32_t> deriv;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Normal-form monomial: commuting atoms with exponents, then a strictly
/// increasing list of distinct odd atoms. All reordering signs live in the
/// coefficient of the owning term.
struct Monomial {
  std::vector<std::pair<Atom, std::uint32_t>> even;  // sorted, exponents >= 1
  std::vector<Atom> odd;                             // strictly ascending

  Parity parity() const { return Parity(odd.size() & 1u); }
  bool nilpotent() const { return !odd.empty(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of the supercommutative algebra of a Context in unique normal
/// form: a finite rational combination of monomials, canonically merged.
/// Value semantics; all operations are pure.
class SuperExpr {
 public:
  using TermMap = std::map<Monomial, Rational>;

  SuperExpr() = default;  // detached zero; usable only as a placeholder

  static SuperExpr zero(const Context& ctx);
  static SuperExpr constant(const Context& ctx, const Rational& c);
  static SuperExpr symbol(const Context& ctx, SymbolId id);
  static SuperExpr atom(const Context& ctx, const Atom& a);
  static SuperExpr monomial(const Context& ctx, const Monomial& m,
                            const Rational& c);

  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// True iff every monomial has the given parity (zero counts as both).
  bool homogeneous(Parity p) const;
  /// Parity of a homogeneous nonzero expression, nullopt otherwise.
  std::optional<Parity> parity() const;

  /// Coefficient of the empty monomial (the scalar part).
  Rational scalar_part() const;
  /// All monomials contain at least one odd atom.
  bool is_nilpotent() const;
  bool depends_on(SymbolId id) const;

  SuperExpr operator-() const;
  friend SuperExpr operator+(const SuperExpr& a, const SuperExpr& b);
  friend SuperExpr operator-(const SuperExpr& a, const SuperExpr& b);
  friend SuperExpr operator*(const SuperExpr& a, const SuperExpr& b);
  friend SuperExpr operator*(const Rational& c, const SuperExpr& a);
  friend bool operator==(const SuperExpr& a, const SuperExpr& b);

  SuperExpr& operator+=(const SuperExpr& b) { return *this = *this + b; }
  SuperExpr& operator-=(const SuperExpr& b) { return *this = *this - b; }
  SuperExpr& operator*=(const SuperExpr& b) { return *this = *this * b; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  static void check_same_context(const SuperExpr& a, const SuperExpr& b);

  Context ctx_;
  TermMap terms_;

  friend SuperExpr graded_derivation(
      const SuperExpr&, Parity,
      const std::function<SuperExpr(const Atom&)>&);
  friend SuperExpr substitute_terms(const SuperExpr&, const Context&,
                                    const std::function<SuperExpr(const Atom&)>&);
};

SuperExpr pow(const SuperExpr& a, unsigned k);

/// Graded derivation of the given parity, extended from its action on atoms
/// by the graded Leibniz rule (the operator passes factors from the left, so
/// each term picks up (-1)^{parity * parity(prefix)}).
SuperExpr graded_derivation(const SuperExpr& e, Parity dparity,
                            const std::function<SuperExpr(const Atom&)>& action);

/// Left partial derivative with respect to a coordinate or parameter. For odd
/// symbols this is the algebraic left derivative; for even symbols it is the
/// formal partial acting on function symbols through the chain rule over
/// their declared arguments.
SuperExpr partial(const SuperExpr& e, SymbolId s);

/// Formal partial with respect to the k-th derivative instance of a function
/// symbol, treating jet entries f, f', f'', ... as independent variables.
/// For k = 0 it also reaches function symbols that take f as an argument.
SuperExpr partial_jet(const SuperExpr& e, SymbolId fn, std::uint32_t order);

/// Algebra morphism determined by images of symbols; images must live in the
/// expression's own context and unmapped symbols pass through. Mapping a
/// coordinate c to c + (nilpotent) reaches function symbols with argument c
/// through a finite Taylor expansion.
SuperExpr substitute(const SuperExpr& e,
                     const std::map<SymbolId, SuperExpr>& images);

/// Pullback into a different context; every symbol occurring in e must be
/// mapped (there is no cross-context pass-through).
SuperExpr substitute_into(const SuperExpr& e,
                          const std::map<SymbolId, SuperExpr>& images,
                          const Context& target);

/// Berezin integral over the given odd symbols: the iterated left derivative
/// d/d(xi_q) ... d/d(xi_1) applied in list order, normalised so that the
/// integral of xi_1 xi_2 ... xi_q is 1. An empty list returns e unchanged.
SuperExpr berezin(const SuperExpr& e, std::span<const SymbolId> odd_list);

/// W(arg) for a declared one-argument function symbol W and arg = body + n
/// with n nilpotent: the terminating expansion sum_k W^(k)(body) n^k / k!.
/// The even part of arg must be exactly W's declared argument.
SuperExpr nilpotent_taylor(const Context& ctx, SymbolId fn,
                           const SuperExpr& arg);

/// Exact inverse of an even element c + n (c a nonzero rational, n nilpotent)
/// via the terminating geometric series.
SuperExpr invert_even(const SuperExpr& e);

/// Monomials whose count of odd atoms drawn from the given set matches
/// `count` exactly.
SuperExpr filter_by_odd_degree(const SuperExpr& e,
                               std::span<const SymbolId> odd_symbols,
                               std::size_t count);

std::string to_string(const Context& ctx, const Atom& a);
std::string to_string(const SuperExpr& e);

}  // namespace superkit
