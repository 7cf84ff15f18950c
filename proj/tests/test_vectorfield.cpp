#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superkit/lorentz.hpp"
#include "superkit/vectorfield.hpp"
#include "testgen.hpp"

using namespace superkit;

namespace {

struct R11 {
  Context ctx;
  SymbolId t, th, q, psi, eps;
  SuperVectorField P, Q, D;
  R11()
      : P(SuperVectorField::zero(ctx, Parity::Even)),
        Q(SuperVectorField::zero(ctx, Parity::Odd)),
        D(SuperVectorField::zero(ctx, Parity::Odd)) {
    t = ctx.coordinate("t", Parity::Even);
    th = ctx.coordinate("theta", Parity::Odd);
    q = ctx.function("q", Parity::Even, {t});
    psi = ctx.function("psi", Parity::Odd, {t});
    eps = ctx.parameter("eps", Parity::Odd);
    P = SuperVectorField::d(ctx, t);
    Q = SuperVectorField::d(ctx, th) +
        rat(1, 4) * (sym(th) * SuperVectorField::d(ctx, t));
    D = SuperVectorField::d(ctx, th) -
        rat(1, 4) * (sym(th) * SuperVectorField::d(ctx, t));
  }
  SuperExpr sym(SymbolId s) const { return SuperExpr::symbol(ctx, s); }
};

}  // namespace

TEST_CASE("application of vector fields") {
  R11 m;
  CHECK(m.P.apply(m.sym(m.t)) == SuperExpr::constant(m.ctx, 1));
  // Q(q + theta psi) = psi + 1/4 theta q'
  SuperExpr Phi = m.sym(m.q) + m.sym(m.th) * m.sym(m.psi);
  SuperExpr qdot = SuperExpr::atom(m.ctx, Atom{m.q, {1}});
  CHECK(m.Q.apply(Phi) == m.sym(m.psi) + rat(1, 4) * (m.sym(m.th) * qdot));
  // derivations kill constants
  CHECK(m.Q.apply(SuperExpr::constant(m.ctx, 1)).is_zero());
  CHECK(m.D.apply(SuperExpr::constant(m.ctx, rat(5))).is_zero());
}

TEST_CASE("N=1 bracket relations") {
  R11 m;
  CHECK(superbracket(m.Q, m.Q) == rat(1, 2) * m.P);
  CHECK(superbracket(m.P, m.Q).is_zero());
  CHECK(superbracket(m.P, m.P).is_zero());
  CHECK(superbracket(m.D, m.Q).is_zero());
  CHECK(superbracket(m.D, m.D) == rat(-1, 2) * m.P);
}

TEST_CASE("bracket axioms on random fields") {
  Context ctx;
  SymbolId t = ctx.coordinate("t", Parity::Even);
  SymbolId th1 = ctx.coordinate("th1", Parity::Odd);
  SymbolId th2 = ctx.coordinate("th2", Parity::Odd);
  std::vector<SymbolId> odds{th1, th2}, evens{t};
  testgen::ExprGen gen(ctx, odds, evens, 57);

  auto random_field = [&](Parity p) {
    std::map<SymbolId, SuperExpr> coeffs;
    coeffs[t] = gen.homogeneous(p, 2);
    coeffs[th1] = gen.homogeneous(p + Parity::Odd, 2);
    coeffs[th2] = gen.homogeneous(p + Parity::Odd, 2);
    return SuperVectorField(ctx, p, coeffs);
  };

  for (int it = 0; it < 25; ++it) {
    Parity px = (it % 2) ? Parity::Odd : Parity::Even;
    Parity py = (it % 3 == 0) ? Parity::Odd : Parity::Even;
    Parity pz = (it % 5 == 0) ? Parity::Odd : Parity::Even;
    SuperVectorField x = random_field(px);
    SuperVectorField y = random_field(py);
    SuperVectorField z = random_field(pz);

    int kxy = (is_odd(px) && is_odd(py)) ? -1 : 1;
    CHECK(superbracket(x, y) == Rational(-kxy) * superbracket(y, x));

    // graded Jacobi
    int kxz = (is_odd(px) && is_odd(py)) ? -1 : 1;
    SuperVectorField lhs = superbracket(x, superbracket(y, z));
    SuperVectorField rhs = superbracket(superbracket(x, y), z) +
                           Rational(kxz) * superbracket(y, superbracket(x, z));
    CHECK(lhs == rhs);

    // derivation property against operator composition
    SuperExpr f = gen.expr();
    SuperExpr op = x.apply(y.apply(f)) - Rational(kxy) * y.apply(x.apply(f));
    CHECK(superbracket(x, y).apply(f) == op);
  }
}

TEST_CASE("susy variation") {
  R11 m;
  SuperExpr Phi = m.sym(m.q) + m.sym(m.th) * m.sym(m.psi);
  SuperExpr qdot = SuperExpr::atom(m.ctx, Atom{m.q, {1}});
  SuperExpr dPhi = susy_variation(m.Q, Phi, m.eps);
  SuperExpr expected = m.sym(m.eps) * m.sym(m.psi) +
                       rat(1, 4) * (m.sym(m.eps) * m.sym(m.th) * qdot);
  CHECK(dPhi == expected);
  CHECK(dPhi.homogeneous(Parity::Even));

  // setting eps to zero afterwards kills the variation
  std::map<SymbolId, SuperExpr> kill;
  kill[m.eps] = SuperExpr::zero(m.ctx);
  CHECK(substitute(dPhi, kill).is_zero());

  // a non-odd-parameter is rejected
  SymbolId c = m.ctx.parameter("c", Parity::Even);
  CHECK_THROWS_AS(susy_variation(m.Q, Phi, c), Error);
}

TEST_CASE("Killing fields of the Minkowski metric") {
  MinkowskiChart mk = build_minkowski_chart();
  for (const auto& p : mk.p) CHECK(killing_check(p, mk.eta));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != nu) CHECK(killing_check(mk.j[mu][nu], mk.eta));
  // dilation x^1 d_1 is not an isometry
  SuperVectorField dil = SuperExpr::symbol(mk.ctx, mk.x[1]) *
                         SuperVectorField::d(mk.ctx, mk.x[1]);
  CHECK_FALSE(killing_check(dil, mk.eta));
}

TEST_CASE("Poincare algebra relations") {
  MinkowskiChart mk = build_minkowski_chart();
  std::vector<Rational> eta_diag{-1, 1, 1, 1};
  auto zero = SuperVectorField::zero(mk.ctx, Parity::Even);
  // [P,P] = 0
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      CHECK(superbracket(mk.p[mu], mk.p[nu]).is_zero());
  // [P_mu, J^{l s}] = (delta^l_mu eta^{s r} - delta^s_mu eta^{l r}) P_r
  for (int mu = 0; mu < 4; ++mu)
    for (int l = 0; l < 4; ++l)
      for (int s = 0; s < 4; ++s) {
        SuperVectorField rhs = zero;
        if (mu == l) rhs = rhs + eta_diag[s] * mk.p[s];
        if (mu == s) rhs = rhs - eta_diag[l] * mk.p[l];
        CHECK(superbracket(mk.p[mu], mk.j[l][s]) == rhs);
      }
  // J-J relation with the shared structure constants
  std::function<SuperVectorField(int, int)> jof = [&](int a, int b) {
    return mk.j[a][b];
  };
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          SuperVectorField rhs =
              lorentz_bracket_rhs(jof, eta_diag, mu, nu, r, s, zero);
          CHECK(superbracket(mk.j[mu][nu], mk.j[r][s]) == rhs);
        }
}

TEST_CASE("Frobenius curvature on R^{1|1}") {
  R11 m;
  // span{D} with complement {P}: a (super) contact structure
  Distribution dist({m.D}, {m.P});
  SuperVectorField r = frobenius_curvature(dist, m.D, m.D);
  CHECK(r == rat(-1, 2) * m.P);
  CHECK(is_maximally_nonintegrable(dist));

  // the coordinate distribution span{d/dt} is integrable
  Distribution coord({m.P}, {SuperVectorField::d(m.ctx, m.th)});
  CHECK(frobenius_curvature(coord, m.P, m.P).is_zero());
  CHECK_FALSE(is_maximally_nonintegrable(coord));

  // span{d/dtheta} closes on itself: not maximally non-integrable
  Distribution flat({SuperVectorField::d(m.ctx, m.th)}, {m.P});
  CHECK(frobenius_curvature(flat, SuperVectorField::d(m.ctx, m.th),
                            SuperVectorField::d(m.ctx, m.th))
            .is_zero());
  CHECK_FALSE(is_maximally_nonintegrable(flat));

  // a field outside the distribution is rejected
  CHECK_THROWS_AS(frobenius_curvature(dist, m.P, m.D), Error);
}
