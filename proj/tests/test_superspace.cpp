#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superkit/supermatrix.hpp"
#include "superkit/superspace.hpp"

using namespace superkit;

namespace {

struct N1 {
  SuperspaceModel m = build_r11();
  SymbolId t, th, q, psi, eps;
  Superfield phi;
  N1() {
    t = m.even_coords[0];
    th = m.odd_coords[0];
    q = m.ctx.function("q", Parity::Even, {t});
    psi = m.ctx.function("psi", Parity::Odd, {t});
    eps = m.ctx.parameter("eps", Parity::Odd);
    phi.parity = Parity::Even;
    phi.components[{}] = q;
    phi.components[{th}] = psi;
  }
  SuperExpr s(SymbolId id) const { return SuperExpr::symbol(m.ctx, id); }
  SuperExpr jet(SymbolId f, unsigned k) const {
    return SuperExpr::atom(m.ctx, Atom{f, {k}});
  }
};

struct N2 {
  SuperspaceModel m = build_r12();
  SymbolId t, th1, th2, q, psi1, psi2, F, W, e1, e2;
  Superfield phi;
  N2() {
    t = m.even_coords[0];
    th1 = m.odd_coords[0];
    th2 = m.odd_coords[1];
    q = m.ctx.function("q", Parity::Even, {t});
    psi1 = m.ctx.function("psi1", Parity::Odd, {t});
    psi2 = m.ctx.function("psi2", Parity::Odd, {t});
    F = m.ctx.function("F", Parity::Even, {t});
    W = m.ctx.function("W", Parity::Even, {q});
    e1 = m.ctx.parameter("eps1", Parity::Odd);
    e2 = m.ctx.parameter("eps2", Parity::Odd);
    phi.parity = Parity::Even;
    phi.components[{}] = q;
    phi.components[{th1}] = psi1;
    phi.components[{th2}] = psi2;
    phi.components[{th1, th2}] = F;
  }
  SuperExpr s(SymbolId id) const { return SuperExpr::symbol(m.ctx, id); }
  SuperExpr jet(SymbolId f, unsigned k) const {
    return SuperExpr::atom(m.ctx, Atom{f, {k}});
  }
};

}  // namespace

TEST_CASE("model construction verifies the bracket table") {
  SuperspaceModel r11 = build_r11();
  CHECK(superbracket(r11.q[0], r11.q[0]) == rat(1, 2) * r11.p[0]);
  CHECK(superbracket(r11.d[0], r11.d[0]) == rat(-1, 2) * r11.p[0]);
  CHECK(superbracket(r11.d[0], r11.q[0]).is_zero());
  CHECK(r11.qq[0][0][0] == rat(1, 2));

  SuperspaceModel r12 = build_r12();
  CHECK(superbracket(r12.q[0], r12.q[1]).is_zero());
  CHECK(superbracket(r12.q[1], r12.q[1]) == rat(1, 2) * r12.p[0]);

  // a perturbed coefficient must fail the verification
  CHECK_THROWS_AS(build_r11(rat(1, 2)), Error);
  CHECK_THROWS_AS(build_r12(rat(1, 2)), Error);
  CHECK_THROWS_AS(build_super_minkowski(GammaRep::majorana(), rat(1, 2)),
                  Error);

  CHECK(build_model_by_name("R1|1").name == "R1|1");
  CHECK(build_model_by_name("M3,1|4").odd_coords.size() == 4);
  CHECK_THROWS_AS(build_model_by_name("R9|9"), Error);
}

TEST_CASE("superfield expansion") {
  N1 n;
  CHECK(expand(n.m, n.phi) == n.s(n.q) + n.s(n.th) * n.s(n.psi));

  Superfield empty;
  CHECK(expand(n.m, empty).is_zero());

  N2 n2;
  SuperExpr e = expand(n2.m, n2.phi);
  SuperExpr expect = n2.s(n2.q) + n2.s(n2.th1) * n2.s(n2.psi1) +
                     n2.s(n2.th2) * n2.s(n2.psi2) +
                     n2.s(n2.th1) * n2.s(n2.th2) * n2.s(n2.F);
  CHECK(e == expect);

  // wrong component parity is rejected
  Superfield bad;
  bad.parity = Parity::Even;
  bad.components[{n.th}] = n.q;  // theta-linear component must be odd
  CHECK_THROWS_AS(expand(n.m, bad), Error);
}

TEST_CASE("N=1 component variations") {
  N1 n;
  auto var = component_variations(n.m, n.phi, {n.eps});
  CHECK(var[n.q] == n.s(n.eps) * n.s(n.psi));
  CHECK(var[n.psi] == rat(-1, 4) * (n.s(n.eps) * n.jet(n.q, 1)));
}

TEST_CASE("N=2 component variations match the four displayed laws") {
  N2 n;
  auto var = component_variations(n.m, n.phi, {n.e1, n.e2});
  CHECK(var[n.q] == n.s(n.e1) * n.s(n.psi1) + n.s(n.e2) * n.s(n.psi2));
  CHECK(var[n.psi1] == rat(-1, 4) * (n.s(n.e1) * n.jet(n.q, 1)) +
                           n.s(n.e2) * n.s(n.F));
  CHECK(var[n.psi2] == rat(-1, 4) * (n.s(n.e2) * n.jet(n.q, 1)) -
                           n.s(n.e1) * n.s(n.F));
  CHECK(var[n.F] == rat(1, 4) * (n.s(n.e1) * n.jet(n.psi2, 1)) -
                        rat(1, 4) * (n.s(n.e2) * n.jet(n.psi1, 1)));

  // zero parameters give zero variations
  SymbolId z1 = n.m.ctx.parameter("z1", Parity::Odd);
  SymbolId z2 = n.m.ctx.parameter("z2", Parity::Odd);
  std::map<SymbolId, SuperExpr> kill;
  kill[z1] = SuperExpr::zero(n.m.ctx);
  kill[z2] = SuperExpr::zero(n.m.ctx);
  auto var0 = component_variations(n.m, n.phi, {z1, z2});
  for (auto& [f, v] : var0) CHECK(substitute(v, kill).is_zero());
}

TEST_CASE("N=1 action reduction and quasi-invariance") {
  N1 n;
  SuperExpr phi = expand(n.m, n.phi);
  SuperExpr phidot = partial(phi, n.t);
  ActionSpec spec{-(n.m.d[0].apply(phi) * phidot), n.t, {n.th}};
  SuperExpr L = reduce_action(spec);

  SuperExpr qdot = n.jet(n.q, 1);
  SuperExpr psidot = n.jet(n.psi, 1);
  // 1/4 qdot^2 - psidot psi (normal form writes it as + psi psidot)
  SuperExpr expect = rat(1, 4) * (qdot * qdot) - psidot * n.s(n.psi);
  CHECK(L == expect);

  // zero integrand reduces to zero
  CHECK(reduce_action({SuperExpr::zero(n.m.ctx), n.t, {n.th}}).is_zero());

  // delta L = 1/4 eps d/dt(qdot psi), a total derivative
  auto var = component_variations(n.m, n.phi, {n.eps});
  std::map<SymbolId, SuperExpr> vmap{{n.q, var[n.q]}, {n.psi, var[n.psi]}};
  SuperExpr dL = apply_field_variation(L, vmap);
  SuperExpr boundary =
      rat(1, 4) * (n.s(n.eps) * partial(qdot * n.s(n.psi), n.t));
  CHECK(dL == boundary);
  CHECK((dL - boundary).is_zero());
  CHECK(is_total_derivative(dL));
  CHECK_FALSE(is_total_derivative(rat(1, 4) * (qdot * qdot)));
}

TEST_CASE("Euler-Lagrange derivatives") {
  N2 n;
  SuperExpr qdot = n.jet(n.q, 1);
  SuperExpr L1 = rat(1, 4) * (qdot * qdot);
  CHECK(euler_lagrange(L1, n.q) == rat(-1, 2) * n.jet(n.q, 2));

  SuperExpr W1 = n.jet(n.W, 1);
  SuperExpr L2 = n.s(n.F) * n.s(n.F) - n.s(n.F) * W1;
  CHECK(euler_lagrange(L2, n.F) == rat(2) * n.s(n.F) - W1);

  // total derivatives have vanishing variational derivative
  SuperExpr L3 = partial(qdot * n.s(n.psi1), n.t);
  CHECK(euler_lagrange(L3, n.q).is_zero());
  CHECK(euler_lagrange(L3, n.psi1).is_zero());

  // third derivatives are out of scope
  SuperExpr L4 = n.jet(n.q, 3) * qdot;
  CHECK_THROWS_AS(euler_lagrange(L4, n.q), Error);
}

TEST_CASE("N=2 pipeline: reduction, elimination, invariance") {
  N2 n;
  SuperExpr phi = expand(n.m, n.phi);
  SuperExpr integrand = n.m.d[0].apply(phi) * n.m.d[1].apply(phi) -
                        nilpotent_taylor(n.m.ctx, n.W, phi);
  ActionSpec spec{integrand, n.t, {n.th1, n.th2}};
  SuperExpr L = reduce_action(spec);

  SuperExpr qdot = n.jet(n.q, 1);
  SuperExpr p1d = n.jet(n.psi1, 1), p2d = n.jet(n.psi2, 1);
  SuperExpr W1 = n.jet(n.W, 1), W2 = n.jet(n.W, 2);
  // The term-by-term reduction; the qdot^2 coefficient is 1/16, forced by
  // invariance under the displayed transformations (see the invariance check
  // below, which pins it uniquely).
  SuperExpr expect = rat(1, 16) * (qdot * qdot) - rat(1, 4) * (p1d * n.s(n.psi1)) -
                     rat(1, 4) * (p2d * n.s(n.psi2)) + n.s(n.F) * n.s(n.F) -
                     n.s(n.F) * W1 + n.s(n.psi1) * n.s(n.psi2) * W2;
  CHECK(L == expect);

  // the displayed transformations leave L quasi-invariant
  auto var = component_variations(n.m, n.phi, {n.e1, n.e2});
  std::map<SymbolId, SuperExpr> vmap{{n.q, var[n.q]},
                                     {n.psi1, var[n.psi1]},
                                     {n.psi2, var[n.psi2]},
                                     {n.F, var[n.F]}};
  SuperExpr dL = apply_field_variation(L, vmap);
  CHECK(is_total_derivative(dL));
  // ... and the 1/8 normalisation printed in the source display fails it
  SuperExpr L8 = L + rat(1, 16) * (qdot * qdot);
  SuperExpr dL8 = apply_field_variation(L8, vmap);
  CHECK_FALSE(is_total_derivative(dL8));

  // eliminating F lands on the Witten-model density
  SuperExpr witten = eliminate_auxiliary(L, n.F);
  SuperExpr expect_w = rat(1, 16) * (qdot * qdot) -
                       rat(1, 4) * (p1d * n.s(n.psi1)) -
                       rat(1, 4) * (p2d * n.s(n.psi2)) -
                       rat(1, 4) * (W1 * W1) +
                       n.s(n.psi1) * n.s(n.psi2) * W2;
  CHECK(witten == expect_w);
  CHECK(is_total_derivative(apply_field_variation(witten, vmap)) == false);

  // elimination guards
  CHECK_THROWS_AS(eliminate_auxiliary(expect_w, n.F), Error);  // no F left
  SuperExpr lf2 = n.s(n.F) * n.s(n.F);
  CHECK(eliminate_auxiliary(lf2, n.F).is_zero());
}

TEST_CASE("SUSY shifts are measure-preserving parity-preserving morphisms") {
  for (const char* name : {"R1|1", "R1|2"}) {
    SuperspaceModel m = build_model_by_name(name);
    std::vector<SymbolId> eps;
    for (std::size_t i = 0; i < m.q.size(); ++i)
      eps.push_back(
          m.ctx.parameter("eps" + std::to_string(i + 1), Parity::Odd));
    auto shift = susy_shift(m, eps);
    std::vector<SymbolId> coords = m.ctx.coordinates();
    SuperMatrix j = jacobian(m.ctx, shift, coords);
    CHECK(berezinian(j) == SuperExpr::constant(m.ctx, 1));
  }
}

TEST_CASE("first-order pullback variation agrees with susy_variation") {
  // On R^{1|1} the single eps squares to zero, so the pullback difference is
  // exactly the variation
  N1 n;
  SuperExpr phi = expand(n.m, n.phi);
  auto shift = susy_shift(n.m, {n.eps});
  SuperExpr pulled = substitute(phi, shift);
  CHECK(pulled - phi == susy_variation(n.m.q[0], phi, n.eps));

  // On R^{1|2} keep the eps-linear filtering explicit
  N2 n2;
  SuperExpr phi2 = expand(n2.m, n2.phi);
  auto shift2 = susy_shift(n2.m, {n2.e1, n2.e2});
  SuperExpr diff = substitute(phi2, shift2) - phi2;
  std::vector<SymbolId> epslist{n2.e1, n2.e2};
  SuperExpr linear = filter_by_odd_degree(diff, epslist, 1);
  SuperExpr expected = susy_variation(n2.m.q[0], phi2, n2.e1) +
                       susy_variation(n2.m.q[1], phi2, n2.e2);
  CHECK(linear == expected);
}

TEST_CASE("super-Minkowski SUSY structure") {
  SuperspaceModel m = build_super_minkowski(GammaRep::majorana());
  ChargeConjugation cc = charge_conjugation(GammaRep::majorana());

  // explicit spot check of the displayed bracket
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      SuperVectorField expect = SuperVectorField::zero(m.ctx, Parity::Even);
      for (int mu = 0; mu < 4; ++mu)
        expect = expect + (rat(1, 2) * cc.c_gamma[mu](a, b)) * m.p[mu];
      CHECK(superbracket(m.q[a], m.q[b]) == expect);
    }

  Distribution dist(m.d, m.p);

  // generic X = X_a D^a with even function coefficients
  std::vector<SymbolId> f;
  for (int a = 1; a <= 4; ++a)
    f.push_back(m.ctx.function("f" + std::to_string(a), Parity::Even,
                               m.even_coords));
  SuperVectorField x = SuperVectorField::zero(m.ctx, Parity::Odd);
  for (int a = 0; a < 4; ++a)
    x = x + SuperExpr::symbol(m.ctx, f[a]) * m.d[a];

  for (int beta = 0; beta < 4; ++beta) {
    SuperVectorField r = frobenius_curvature(dist, x, m.d[beta]);
    // R(X, D^beta) = -1/2 X_a (C gamma^mu)^{a beta} d/dx^mu: the magnitude and
    // tensor structure of the displayed formula, with the sign resolved by
    // the graded Leibniz rule
    std::map<SymbolId, SuperExpr> coeffs;
    for (int mu = 0; mu < 4; ++mu) {
      SuperExpr c = SuperExpr::zero(m.ctx);
      for (int a = 0; a < 4; ++a)
        c += (rat(-1, 2) * cc.c_gamma[mu](a, beta)) *
             SuperExpr::symbol(m.ctx, f[a]);
      if (!c.is_zero()) coeffs[m.even_coords[mu]] = c;
    }
    CHECK(r == SuperVectorField(m.ctx, Parity::Even, coeffs));
  }

  // odd coefficients X_a = eps g_a give the same tensor structure
  SymbolId ep = m.ctx.parameter("ep", Parity::Odd);
  SuperVectorField xo = SuperVectorField::zero(m.ctx, Parity::Even);
  for (int a = 0; a < 4; ++a)
    xo = xo + (SuperExpr::symbol(m.ctx, ep) * SuperExpr::symbol(m.ctx, f[a])) *
                  m.d[a];
  SuperVectorField r0 = frobenius_curvature(dist, xo, m.d[0]);
  std::map<SymbolId, SuperExpr> co;
  for (int mu = 0; mu < 4; ++mu) {
    SuperExpr c = SuperExpr::zero(m.ctx);
    for (int a = 0; a < 4; ++a)
      c += (rat(-1, 2) * cc.c_gamma[mu](a, 0)) *
           (SuperExpr::symbol(m.ctx, ep) * SuperExpr::symbol(m.ctx, f[a]));
    if (!c.is_zero()) co[m.even_coords[mu]] = c;
  }
  CHECK(r0 == SuperVectorField(m.ctx, Parity::Odd, co));

  CHECK(is_maximally_nonintegrable(dist));
}

TEST_CASE("CBH composition") {
  SuperspaceModel m = build_super_minkowski(GammaRep::majorana());
  ChargeConjugation cc = charge_conjugation(GammaRep::majorana());

  auto element = [&](const std::string& tag) {
    TranslationElement e;
    for (int mu = 0; mu < 4; ++mu)
      e.x.push_back(SuperExpr::symbol(
          m.ctx, m.ctx.parameter("x" + tag + std::to_string(mu), Parity::Even)));
    for (int a = 0; a < 4; ++a)
      e.th.push_back(SuperExpr::symbol(
          m.ctx, m.ctx.parameter("th" + tag + std::to_string(a), Parity::Odd)));
    return e;
  };
  TranslationElement A = element("A"), B = element("B"), C = element("C");

  TranslationElement AB = cbh_compose(A, B, m);
  for (int a = 0; a < 4; ++a) CHECK(AB.th[a] == A.th[a] + B.th[a]);
  // derived x-shift: x + x' + 1/4 theta'_b theta_a (C gamma^mu)^{ab}
  for (int mu = 0; mu < 4; ++mu) {
    SuperExpr expect = A.x[mu] + B.x[mu];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        expect += (rat(1, 4) * cc.c_gamma[mu](a, b)) * (B.th[b] * A.th[a]);
    CHECK(AB.x[mu] == expect);
  }
  // the 1/2 coefficient printed with the group law display is a factor two
  // away from the structure constants; composing with it breaks the match
  {
    SuperExpr wrong = A.x[0] + B.x[0];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        wrong += (rat(1, 2) * cc.c_gamma[0](a, b)) * (B.th[b] * A.th[a]);
    CHECK_FALSE(AB.x[0] == wrong);
  }

  // identity element
  TranslationElement zero;
  zero.x.assign(4, SuperExpr::zero(m.ctx));
  zero.th.assign(4, SuperExpr::zero(m.ctx));
  TranslationElement AZ = cbh_compose(A, zero, m);
  for (int i = 0; i < 4; ++i) {
    CHECK(AZ.x[i] == A.x[i]);
    CHECK(AZ.th[i] == A.th[i]);
  }

  // associativity
  TranslationElement l = cbh_compose(cbh_compose(A, B, m), C, m);
  TranslationElement r = cbh_compose(A, cbh_compose(B, C, m), m);
  for (int i = 0; i < 4; ++i) {
    CHECK(l.x[i] == r.x[i]);
    CHECK(l.th[i] == r.th[i]);
  }

  // agreement with the vector-field realisation: the composed element equals
  // A + B + 1/2 [A,B] evaluated through superbracket
  auto as_field = [&](const TranslationElement& e) {
    SuperVectorField v = SuperVectorField::zero(m.ctx, Parity::Even);
    for (int mu = 0; mu < 4; ++mu) v = v + e.x[mu] * m.p[mu];
    for (int a = 0; a < 4; ++a) v = v + e.th[a] * m.q[a];
    return v;
  };
  SuperVectorField lhs = as_field(AB);
  SuperVectorField rhs = as_field(A) + as_field(B) +
                         rat(1, 2) * superbracket(as_field(A), as_field(B));
  CHECK(lhs == rhs);

  // the nilpotency precondition is enforced
  SuperspaceModel broken = build_r11();
  broken.translation_nilpotent = false;
  TranslationElement a1{{SuperExpr::zero(broken.ctx)},
                        {SuperExpr::zero(broken.ctx)}};
  CHECK_THROWS_AS(cbh_compose(a1, a1, broken), Error);

  // CBH on R^{1|1}: x'' = x + x' + 1/4 th' th
  SuperspaceModel r11 = build_r11();
  SymbolId xa = r11.ctx.parameter("xa", Parity::Even);
  SymbolId xb = r11.ctx.parameter("xb", Parity::Even);
  SymbolId ta = r11.ctx.parameter("ta", Parity::Odd);
  SymbolId tb = r11.ctx.parameter("tb", Parity::Odd);
  auto s = [&](SymbolId id) { return SuperExpr::symbol(r11.ctx, id); };
  TranslationElement ra{{s(xa)}, {s(ta)}};
  TranslationElement rb{{s(xb)}, {s(tb)}};
  TranslationElement rc = cbh_compose(ra, rb, r11);
  CHECK(rc.x[0] == s(xa) + s(xb) + rat(1, 4) * (s(tb) * s(ta)));
  CHECK(rc.th[0] == s(ta) + s(tb));
}
