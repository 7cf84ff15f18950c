#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "matrixgen.hpp"
#include "superkit/supermatrix.hpp"

using namespace superkit;

namespace {

Context grassmann4(std::vector<SymbolId>& odds) {
  Context ctx;
  for (int i = 1; i <= 4; ++i)
    odds.push_back(ctx.coordinate("th" + std::to_string(i), Parity::Odd));
  return ctx;
}

// independent determinant oracle: permutation sum with explicit sign
SuperExpr det_bruteforce(const Context& ctx,
                         const std::vector<std::vector<SuperExpr>>& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SuperExpr acc = SuperExpr::zero(ctx);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    SuperExpr term = SuperExpr::constant(ctx, sign);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("determinant of even matrices") {
  std::vector<SymbolId> odds;
  Context ctx = grassmann4(odds);
  auto one = SuperExpr::constant(ctx, 1);
  auto zero = SuperExpr::zero(ctx);

  std::vector<std::vector<SuperExpr>> id2{{one, zero}, {zero, one}};
  CHECK(det_even(ctx, id2) == one);

  SymbolId a = ctx.parameter("a", Parity::Even);
  SymbolId d = ctx.parameter("d", Parity::Even);
  std::vector<std::vector<SuperExpr>> diag{
      {SuperExpr::symbol(ctx, a), zero}, {zero, SuperExpr::symbol(ctx, d)}};
  CHECK(det_even(ctx, diag) ==
        SuperExpr::symbol(ctx, a) * SuperExpr::symbol(ctx, d));

  testgen::MatrixGen gen(ctx, odds, 31);
  for (int it = 0; it < 20; ++it) {
    std::vector<std::vector<SuperExpr>> m(3,
                                          std::vector<SuperExpr>(3, zero));
    for (auto& row : m)
      for (auto& e : row) e = gen.even_unit();
    CHECK(det_even(ctx, m) == det_bruteforce(ctx, m));
  }

  // odd entries are refused
  std::vector<std::vector<SuperExpr>> bad{{SuperExpr::symbol(ctx, odds[0])}};
  CHECK_THROWS_AS(det_even(ctx, bad), Error);
}

TEST_CASE("berezinian of the N=1 SUSY shift is 1") {
  Context ctx;
  SymbolId t = ctx.coordinate("t", Parity::Even);
  SymbolId th = ctx.coordinate("theta", Parity::Odd);
  SymbolId eps = ctx.parameter("eps", Parity::Odd);
  auto s = [&](SymbolId id) { return SuperExpr::symbol(ctx, id); };

  std::map<SymbolId, SuperExpr> shift;
  shift[t] = s(t) + rat(1, 4) * (s(eps) * s(th));
  shift[th] = s(th) + s(eps);
  std::vector<SymbolId> coords{t, th};
  SuperMatrix j = jacobian(ctx, shift, coords);

  CHECK(j.a()[0][0] == SuperExpr::constant(ctx, 1));
  CHECK(j.b()[0][0] == rat(1, 4) * s(eps));  // -d t'/d theta
  CHECK(j.c()[0][0].is_zero());
  CHECK(j.d()[0][0] == SuperExpr::constant(ctx, 1));
  CHECK(berezinian(j) == SuperExpr::constant(ctx, 1));
}

TEST_CASE("berezinian of the N=2 SUSY shift is 1") {
  Context ctx;
  SymbolId t = ctx.coordinate("t", Parity::Even);
  SymbolId th1 = ctx.coordinate("th1", Parity::Odd);
  SymbolId th2 = ctx.coordinate("th2", Parity::Odd);
  SymbolId e1 = ctx.parameter("eps1", Parity::Odd);
  SymbolId e2 = ctx.parameter("eps2", Parity::Odd);
  auto s = [&](SymbolId id) { return SuperExpr::symbol(ctx, id); };

  std::map<SymbolId, SuperExpr> shift;
  shift[t] = s(t) + rat(1, 4) * (s(e1) * s(th1)) + rat(1, 4) * (s(e2) * s(th2));
  shift[th1] = s(th1) + s(e1);
  shift[th2] = s(th2) + s(e2);
  std::vector<SymbolId> coords{t, th1, th2};
  SuperMatrix j = jacobian(ctx, shift, coords);

  // block structure (1 *; 0 1_2)
  CHECK(j.a()[0][0] == SuperExpr::constant(ctx, 1));
  for (int i = 0; i < 2; ++i) CHECK(j.c()[i][0].is_zero());
  CHECK(j.d()[0][0] == SuperExpr::constant(ctx, 1));
  CHECK(j.d()[1][1] == SuperExpr::constant(ctx, 1));
  CHECK(j.d()[0][1].is_zero());
  CHECK(j.d()[1][0].is_zero());
  CHECK(berezinian(j) == SuperExpr::constant(ctx, 1));
}

TEST_CASE("berezinian basics") {
  std::vector<SymbolId> odds;
  Context ctx = grassmann4(odds);
  CHECK(berezinian(SuperMatrix::identity(ctx, 3, 2)) ==
        SuperExpr::constant(ctx, 1));
  CHECK(berezinian(SuperMatrix::identity(ctx, 0, 4)) ==
        SuperExpr::constant(ctx, 1));

  // identity transform gives the identity matrix
  Context c2;
  SymbolId x = c2.coordinate("x", Parity::Even);
  SymbolId th = c2.coordinate("th", Parity::Odd);
  std::vector<SymbolId> coords{x, th};
  SuperMatrix j = jacobian(c2, {}, coords);
  CHECK(j.a()[0][0] == SuperExpr::constant(c2, 1));
  CHECK(j.d()[0][0] == SuperExpr::constant(c2, 1));
  CHECK(j.b()[0][0].is_zero());
  CHECK(j.c()[0][0].is_zero());

  // pure even scaling x' = 2x
  std::map<SymbolId, SuperExpr> scale;
  scale[x] = rat(2) * SuperExpr::symbol(c2, x);
  std::vector<SymbolId> even_only{x};
  SuperMatrix js = jacobian(c2, scale, even_only);
  CHECK(js.a()[0][0] == SuperExpr::constant(c2, 2));
  CHECK(berezinian(js) == SuperExpr::constant(c2, 2));

  // singular D block is reported
  auto zero = SuperExpr::zero(ctx);
  SuperMatrix::Block a1{{SuperExpr::constant(ctx, 1)}};
  SuperMatrix::Block b1{{zero}};
  SuperMatrix::Block c1{{zero}};
  SuperMatrix::Block d1{{SuperExpr::symbol(ctx, odds[0]) *
                         SuperExpr::symbol(ctx, odds[1])}};
  CHECK_THROWS_AS(berezinian(SuperMatrix(ctx, a1, b1, c1, d1)), Error);
}

TEST_CASE("berezinian is multiplicative") {
  std::vector<SymbolId> odds;
  Context ctx = grassmann4(odds);
  testgen::MatrixGen gen(ctx, odds, 37);
  for (int it = 0; it < 25; ++it) {
    SuperMatrix j1 = gen.invertible(1, 1);
    SuperMatrix j2 = gen.invertible(1, 1);
    CHECK(berezinian(j1 * j2) == berezinian(j1) * berezinian(j2));
  }
  for (int it = 0; it < 25; ++it) {
    SuperMatrix j1 = gen.invertible(2, 2);
    SuperMatrix j2 = gen.invertible(2, 2);
    CHECK(berezinian(j1 * j2) == berezinian(j1) * berezinian(j2));
  }
}

TEST_CASE("block-diagonal berezinian is det(A) det(D)^{-1}") {
  std::vector<SymbolId> odds;
  Context ctx = grassmann4(odds);
  testgen::MatrixGen gen(ctx, odds, 41);
  for (int it = 0; it < 20; ++it) {
    SuperMatrix j = gen.invertible(2, 2);
    auto zero = SuperExpr::zero(ctx);
    SuperMatrix::Block b(2, std::vector<SuperExpr>(2, zero));
    SuperMatrix::Block c(2, std::vector<SuperExpr>(2, zero));
    SuperMatrix diag(ctx, j.a(), b, c, j.d());
    CHECK(berezinian(diag) ==
          det_even(ctx, j.a()) * invert_even(det_even(ctx, j.d())));
  }
}

TEST_CASE("parity-violating blocks are refused") {
  std::vector<SymbolId> odds;
  Context ctx = grassmann4(odds);
  SuperMatrix::Block a{{SuperExpr::symbol(ctx, odds[0])}};  // odd in A
  SuperMatrix::Block b{{SuperExpr::zero(ctx)}};
  SuperMatrix::Block c{{SuperExpr::zero(ctx)}};
  SuperMatrix::Block d{{SuperExpr::constant(ctx, 1)}};
  CHECK_THROWS_AS(SuperMatrix(ctx, a, b, c, d), Error);
}
