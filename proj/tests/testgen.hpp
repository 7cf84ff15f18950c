#pragma once

// Deterministic random expression generator shared by the property tests.

#include <random>
#include <vector>

#include "superkit/expr.hpp"

namespace testgen {

using superkit::Atom;
using superkit::Context;
using superkit::Monomial;
using superkit::Parity;
using superkit::Rational;
using superkit::SuperExpr;
using superkit::SymbolId;

struct ExprGen {
  Context ctx;
  std::vector<SymbolId> odds;
  std::vector<SymbolId> evens;
  std::mt19937_64 rng;

  ExprGen(Context c, std::vector<SymbolId> o, std::vector<SymbolId> e,
          std::uint64_t seed)
      : ctx(std::move(c)), odds(std::move(o)), evens(std::move(e)), rng(seed) {}

  Rational coeff() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return superkit::rat(n, den(rng));
  }

  Monomial monomial() {
    std::uniform_int_distribution<int> flip(0, 1);
    std::uniform_int_distribution<int> expo(0, 2);
    Monomial m;
    for (SymbolId s : odds)
      if (flip(rng)) m.odd.push_back(Atom{s, {}});
    for (SymbolId s : evens) {
      int k = expo(rng);
      if (k > 0) m.even.emplace_back(Atom{s, {}}, (unsigned)k);
    }
    return m;
  }

  SuperExpr expr(int max_terms = 4) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    SuperExpr e = SuperExpr::zero(ctx);
    int n = nt(rng);
    for (int i = 0; i < n; ++i)
      e += SuperExpr::monomial(ctx, monomial(), coeff());
    return e;
  }

  SuperExpr homogeneous(Parity p, int max_terms = 4) {
    SuperExpr e = SuperExpr::zero(ctx);
    int produced = 0, guard = 0;
    std::uniform_int_distribution<int> nt(1, max_terms);
    int want = nt(rng);
    while (produced < want && guard++ < 200) {
      Monomial m = monomial();
      if (m.parity() != p) continue;
      e += SuperExpr::monomial(ctx, m, coeff());
      ++produced;
    }
    return e;
  }
};

}  // namespace testgen
