#include "superkit/superspace.hpp"

#include <algorithm>
#include <set>

namespace superkit {

namespace {

// verify one bracket against its expected constant-coefficient combination of
// the P generators
void verify_bracket(const SuperspaceModel& m, const SuperVectorField& lhs,
                    const std::vector<Rational>& p_coeffs,
                    const std::string& label) {
  SuperVectorField expect = SuperVectorField::zero(m.ctx, lhs.parity());
  for (std::size_t mu = 0; mu < m.p.size(); ++mu)
    expect = expect + p_coeffs[mu] * m.p[mu];
  if (!(lhs == expect))
    fail(ErrorCode::BracketVerificationFailure,
         m.name + ": bracket " + label + " = " + to_string(lhs) +
             ", expected " + to_string(expect));
}

// full table: {Q_a,Q_b} = qq, {D_a,D_b} = -qq, {D,Q} = 0, [P,*] = 0
void verify_model(SuperspaceModel& m,
                  const std::vector<std::vector<std::vector<Rational>>>& qq) {
  std::size_t nq = m.q.size(), np = m.p.size();
  std::vector<Rational> zero(np, Rational(0));
  for (std::size_t a = 0; a < nq; ++a)
    for (std::size_t b = 0; b < nq; ++b) {
      verify_bracket(m, superbracket(m.q[a], m.q[b]), qq[a][b],
                     "{Q" + std::to_string(a + 1) + ",Q" +
                         std::to_string(b + 1) + "}");
      std::vector<Rational> neg(np);
      for (std::size_t mu = 0; mu < np; ++mu) neg[mu] = -qq[a][b][mu];
      verify_bracket(m, superbracket(m.d[a], m.d[b]), neg,
                     "{D" + std::to_string(a + 1) + ",D" +
                         std::to_string(b + 1) + "}");
      verify_bracket(m, superbracket(m.d[a], m.q[b]), zero,
                     "{D" + std::to_string(a + 1) + ",Q" +
                         std::to_string(b + 1) + "}");
    }
  for (std::size_t mu = 0; mu < np; ++mu) {
    for (std::size_t nu = 0; nu < np; ++nu)
      verify_bracket(m, superbracket(m.p[mu], m.p[nu]), zero, "[P,P]");
    for (std::size_t a = 0; a < nq; ++a) {
      verify_bracket(m, superbracket(m.p[mu], m.q[a]), zero, "[P,Q]");
      verify_bracket(m, superbracket(m.p[mu], m.d[a]), zero, "[P,D]");
    }
  }
  m.qq = qq;
  // [anything, [A,B]] lands in span{P} and all P-brackets vanish, so the
  // translation algebra is 2-step nilpotent
  m.translation_nilpotent = true;
}

}  // namespace

SuperspaceModel build_r11(const Rational& c) {
  SuperspaceModel m;
  m.name = "R1|1";
  SymbolId t = m.ctx.coordinate("t", Parity::Even);
  SymbolId th = m.ctx.coordinate("theta", Parity::Odd);
  m.even_coords = {t};
  m.odd_coords = {th};
  auto sth = SuperExpr::symbol(m.ctx, th);
  m.p = {SuperVectorField::d(m.ctx, t)};
  m.q = {SuperVectorField::d(m.ctx, th) +
         c * (sth * SuperVectorField::d(m.ctx, t))};
  m.d = {SuperVectorField::d(m.ctx, th) -
         c * (sth * SuperVectorField::d(m.ctx, t))};
  verify_model(m, {{{rat(1, 2)}}});
  return m;
}

SuperspaceModel build_r12(const Rational& c) {
  SuperspaceModel m;
  m.name = "R1|2";
  SymbolId t = m.ctx.coordinate("t", Parity::Even);
  SymbolId th1 = m.ctx.coordinate("theta1", Parity::Odd);
  SymbolId th2 = m.ctx.coordinate("theta2", Parity::Odd);
  m.even_coords = {t};
  m.odd_coords = {th1, th2};
  m.p = {SuperVectorField::d(m.ctx, t)};
  for (SymbolId th : m.odd_coords) {
    auto sth = SuperExpr::symbol(m.ctx, th);
    m.q.push_back(SuperVectorField::d(m.ctx, th) +
                  c * (sth * SuperVectorField::d(m.ctx, t)));
    m.d.push_back(SuperVectorField::d(m.ctx, th) -
                  c * (sth * SuperVectorField::d(m.ctx, t)));
  }
  verify_model(m, {{{rat(1, 2)}, {Rational(0)}},
                   {{Rational(0)}, {rat(1, 2)}}});
  return m;
}

SuperspaceModel build_super_minkowski(const GammaRep& rep, const Rational& c) {
  SuperspaceModel m;
  m.name = "M3,1|4";
  for (int mu = 0; mu < 4; ++mu)
    m.even_coords.push_back(
        m.ctx.coordinate("x" + std::to_string(mu), Parity::Even));
  for (int a = 1; a <= 4; ++a)
    m.odd_coords.push_back(
        m.ctx.coordinate("theta" + std::to_string(a), Parity::Odd));
  for (int mu = 0; mu < 4; ++mu)
    m.p.push_back(SuperVectorField::d(m.ctx, m.even_coords[mu]));

  ChargeConjugation cc = charge_conjugation(rep);
  for (int a = 0; a < 4; ++a) {
    std::map<SymbolId, SuperExpr> qc, dc;
    qc[m.odd_coords[a]] = SuperExpr::constant(m.ctx, 1);
    dc[m.odd_coords[a]] = SuperExpr::constant(m.ctx, 1);
    for (int mu = 0; mu < 4; ++mu) {
      SuperExpr coeff = SuperExpr::zero(m.ctx);
      for (int b = 0; b < 4; ++b)
        coeff += (c * cc.c_gamma[mu](b, a)) *
                 SuperExpr::symbol(m.ctx, m.odd_coords[b]);
      if (!coeff.is_zero()) {
        qc[m.even_coords[mu]] = coeff;
        dc[m.even_coords[mu]] = -coeff;
      }
    }
    m.q.emplace_back(m.ctx, Parity::Odd, qc);
    m.d.emplace_back(m.ctx, Parity::Odd, dc);
  }

  std::vector<std::vector<std::vector<Rational>>> qq(
      4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4)));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int mu = 0; mu < 4; ++mu)
        qq[a][b][mu] = rat(1, 2) * cc.c_gamma[mu](a, b);
  verify_model(m, qq);
  return m;
}

SuperspaceModel build_model_by_name(const std::string& name) {
  if (name == "R1|1") return build_r11();
  if (name == "R1|2") return build_r12();
  if (name == "M3,1|4") return build_super_minkowski(GammaRep::majorana());
  fail(ErrorCode::SemanticError, "unknown model '" + name + "'");
}

// -------------------------------------------------------------- superfields

SuperExpr expand(const SuperspaceModel& m, const Superfield& field) {
  std::set<SymbolId> chart(m.odd_coords.begin(), m.odd_coords.end());
  SuperExpr out = SuperExpr::zero(m.ctx);
  for (const auto& [basis, comp] : field.components) {
    Parity degree = Parity(basis.size() & 1u);
    if (m.ctx.info(comp).parity != field.parity + degree)
      fail(ErrorCode::ParityViolation,
           "component '" + m.ctx.info(comp).name +
               "' has the wrong parity for its basis monomial");
    SuperExpr mono = SuperExpr::constant(m.ctx, 1);
    for (SymbolId th : basis) {
      if (!chart.count(th))
        fail(ErrorCode::SemanticError,
             "basis monomial uses a non-chart symbol");
      mono = mono * SuperExpr::symbol(m.ctx, th);
    }
    out += mono * SuperExpr::symbol(m.ctx, comp);
  }
  return out;
}

SuperExpr extract_component(const SuperspaceModel& m, const SuperExpr& e,
                            const std::vector<SymbolId>& basis) {
  std::set<SymbolId> chart(m.odd_coords.begin(), m.odd_coords.end());
  SuperExpr out = SuperExpr::zero(m.ctx);
  for (const auto& [mono, c] : e.terms()) {
    std::vector<SymbolId> present;
    for (const auto& a : mono.odd)
      if (chart.count(a.sym)) present.push_back(a.sym);
    if (present != basis) continue;
    // sign of moving the chart generators to the front, keeping both
    // relative orders
    int sign = 1;
    std::size_t seen_non_chart = 0;
    for (const auto& a : mono.odd) {
      if (chart.count(a.sym)) {
        if (seen_non_chart % 2 == 1) sign = -sign;
      } else {
        ++seen_non_chart;
      }
    }
    Monomial rest;
    rest.even = mono.even;
    for (const auto& a : mono.odd)
      if (!chart.count(a.sym)) rest.odd.push_back(a);
    out += SuperExpr::monomial(m.ctx, rest, c * sign);
  }
  return out;
}

std::map<SymbolId, SuperExpr> component_variations(
    const SuperspaceModel& m, const Superfield& field,
    const std::vector<SymbolId>& eps) {
  if (eps.size() != m.q.size())
    fail(ErrorCode::InvalidParameter,
         "need one odd parameter per supersymmetry");
  SuperExpr phi = expand(m, field);
  SuperExpr dphi = SuperExpr::zero(m.ctx);
  for (std::size_t i = 0; i < eps.size(); ++i)
    dphi += susy_variation(m.q[i], phi, eps[i]);

  // guard: no monomial may fall outside the field's basis
  std::set<std::vector<SymbolId>> known;
  for (const auto& [basis, comp] : field.components) known.insert(basis);
  std::set<SymbolId> chart(m.odd_coords.begin(), m.odd_coords.end());
  for (const auto& [mono, c] : dphi.terms()) {
    std::vector<SymbolId> present;
    for (const auto& a : mono.odd)
      if (chart.count(a.sym)) present.push_back(a.sym);
    if (!known.count(present))
      fail(ErrorCode::SemanticError,
           "variation produced a monomial outside the superfield basis");
  }

  std::map<SymbolId, SuperExpr> out;
  for (const auto& [basis, comp] : field.components)
    out[comp] = extract_component(m, dphi, basis);
  return out;
}

std::map<SymbolId, SuperExpr> susy_shift(const SuperspaceModel& m,
                                         const std::vector<SymbolId>& eps) {
  if (eps.size() != m.q.size())
    fail(ErrorCode::InvalidParameter,
         "need one odd parameter per supersymmetry");
  std::map<SymbolId, SuperExpr> shift;
  for (std::size_t a = 0; a < m.odd_coords.size(); ++a)
    shift[m.odd_coords[a]] = SuperExpr::symbol(m.ctx, m.odd_coords[a]) +
                             SuperExpr::symbol(m.ctx, eps[a]);
  for (std::size_t mu = 0; mu < m.even_coords.size(); ++mu) {
    SuperExpr x = SuperExpr::symbol(m.ctx, m.even_coords[mu]);
    for (std::size_t a = 0; a < m.q.size(); ++a)
      for (std::size_t b = 0; b < m.q.size(); ++b)
        x += (rat(1, 2) * m.qq[a][b][mu]) *
             (SuperExpr::symbol(m.ctx, eps[b]) *
              SuperExpr::symbol(m.ctx, m.odd_coords[a]));
    shift[m.even_coords[mu]] = x;
  }
  return shift;
}

// ------------------------------------------------------------------ actions

SuperExpr reduce_action(const ActionSpec& spec) {
  // the Berezin measure is itself odd, so the integrand parity must cancel
  // against the measure for the reduced Lagrangian to come out even
  Parity needed = Parity(spec.odd_measure.size() & 1u);
  if (!spec.integrand.homogeneous(needed))
    fail(ErrorCode::ParityViolation,
         "integrand parity does not match the odd measure");
  return berezin(spec.integrand, spec.odd_measure);
}

namespace {

std::uint32_t max_jet_order(const SuperExpr& e, SymbolId field) {
  std::uint32_t k = 0;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [a, unused] : m.even)
      if (a.sym == field) k = std::max(k, a.deriv[0]);
    for (const auto& a : m.odd)
      if (a.sym == field) k = std::max(k, a.deriv[0]);
  }
  return k;
}

}  // namespace

SuperExpr euler_lagrange(const SuperExpr& density, SymbolId field) {
  const Context& ctx = density.context();
  const SymbolInfo& si = ctx.info(field);
  if (si.kind != SymbolKind::Function || si.args.size() != 1 ||
      ctx.info(si.args[0]).kind != SymbolKind::Coordinate)
    fail(ErrorCode::InvalidTarget,
         "variational derivative needs a field over one coordinate");
  SymbolId t = si.args[0];
  std::uint32_t kmax = max_jet_order(density, field);
  if (kmax > 2)
    fail(ErrorCode::UnsupportedArgument,
         "densities with derivative order > 2 in '" + si.name +
             "' are out of scope");
  SuperExpr out = SuperExpr::zero(ctx);
  for (std::uint32_t k = 0; k <= kmax; ++k) {
    SuperExpr term = partial_jet(density, field, k);
    for (std::uint32_t i = 0; i < k; ++i) term = partial(term, t);
    out += (k % 2) ? -term : term;
  }
  return out;
}

std::vector<SymbolId> dynamical_fields(const SuperExpr& density) {
  const Context& ctx = density.context();
  std::set<SymbolId> seen;
  std::function<void(SymbolId)> visit = [&](SymbolId s) {
    const SymbolInfo& si = ctx.info(s);
    if (si.kind != SymbolKind::Function) return;
    for (SymbolId a : si.args) visit(a);
    if (si.args.size() == 1 &&
        ctx.info(si.args[0]).kind == SymbolKind::Coordinate)
      seen.insert(s);
  };
  for (const auto& [m, c] : density.terms()) {
    for (const auto& [a, unused] : m.even) visit(a.sym);
    for (const auto& a : m.odd) visit(a.sym);
  }
  return {seen.begin(), seen.end()};
}

bool is_total_derivative(const SuperExpr& density) {
  for (SymbolId f : dynamical_fields(density))
    if (!euler_lagrange(density, f).is_zero()) return false;
  return true;
}

SuperExpr apply_field_variation(const SuperExpr& e,
                                const std::map<SymbolId, SuperExpr>& var) {
  const Context& ctx = e.context();
  for (const auto& [f, img] : var) {
    const SymbolInfo& si = ctx.info(f);
    if (si.kind != SymbolKind::Function)
      fail(ErrorCode::InvalidTarget, "'" + si.name + "' is not a field");
    if (!img.homogeneous(si.parity))
      fail(ErrorCode::ParityViolation,
           "variation of '" + si.name + "' must preserve parity");
  }
  return graded_derivation(e, Parity::Even, [&](const Atom& a) -> SuperExpr {
    const SymbolInfo& si = ctx.info(a.sym);
    if (auto it = var.find(a.sym); it != var.end()) {
      SuperExpr img = it->second;
      for (std::size_t i = 0; i < si.args.size(); ++i)
        for (std::uint32_t k = 0; k < a.deriv[i]; ++k)
          img = partial(img, si.args[i]);
      return img;
    }
    if (si.kind == SymbolKind::Function) {
      SuperExpr sum = SuperExpr::zero(ctx);
      for (std::size_t i = 0; i < si.args.size(); ++i) {
        auto it = var.find(si.args[i]);
        if (it == var.end()) continue;
        Atom bumped = a;
        bumped.deriv[i] += 1;
        sum += SuperExpr::atom(ctx, bumped) * it->second;
      }
      return sum;
    }
    return SuperExpr::zero(ctx);
  });
}

SuperExpr eliminate_auxiliary(const SuperExpr& density, SymbolId field) {
  const Context& ctx = density.context();
  SuperExpr eom = euler_lagrange(density, field);
  if (eom.is_zero())
    fail(ErrorCode::NotAuxiliary,
         "density does not depend on '" + ctx.info(field).name + "'");
  SuperExpr a = partial_jet(eom, field, 0);
  if (a.depends_on(field) || max_jet_order(eom, field) > 0)
    fail(ErrorCode::NotAuxiliary,
         "equation of motion is not linear in '" + ctx.info(field).name + "'");
  SuperExpr ainv;
  try {
    ainv = invert_even(a);
  } catch (const Error&) {
    fail(ErrorCode::NotAuxiliary,
         "coefficient of '" + ctx.info(field).name + "' is not invertible");
  }
  std::map<SymbolId, SuperExpr> zero_map;
  zero_map[field] = SuperExpr::zero(ctx);
  SuperExpr b = substitute(eom, zero_map);
  // check exact linearity: eom = a * field + b
  SuperExpr recomposed = a * SuperExpr::symbol(ctx, field) + b;
  if (!(recomposed == eom))
    fail(ErrorCode::NotAuxiliary, "equation of motion is not affine in '" +
                                      ctx.info(field).name + "'");
  SuperExpr sol = -(ainv * b);
  if (!sol.homogeneous(ctx.info(field).parity))
    fail(ErrorCode::NotAuxiliary, "solution violates the field's parity");
  std::map<SymbolId, SuperExpr> image;
  image[field] = sol;
  SuperExpr out = substitute(density, image);
  if (out.depends_on(field))
    fail(ErrorCode::Internal, "auxiliary field survived its own elimination");
  return out;
}

// ---------------------------------------------------------------------- CBH

TranslationElement cbh_compose(const TranslationElement& a,
                               const TranslationElement& b,
                               const SuperspaceModel& m) {
  if (!m.translation_nilpotent)
    fail(ErrorCode::CbhOrderUnsupported,
         "translation algebra is not verified 2-step nilpotent");
  std::size_t np = m.p.size(), nq = m.q.size();
  if (a.x.size() != np || b.x.size() != np || a.th.size() != nq ||
      b.th.size() != nq)
    fail(ErrorCode::DimensionMismatch,
         "translation element does not match the model");
  for (const auto& e : a.x)
    if (!e.homogeneous(Parity::Even))
      fail(ErrorCode::ParityViolation, "P coefficients must be even");
  for (const auto& e : a.th)
    if (!e.homogeneous(Parity::Odd))
      fail(ErrorCode::ParityViolation, "Q coefficients must be odd");

  TranslationElement out;
  out.th.reserve(nq);
  for (std::size_t i = 0; i < nq; ++i) out.th.push_back(a.th[i] + b.th[i]);
  for (std::size_t mu = 0; mu < np; ++mu) {
    SuperExpr x = a.x[mu] + b.x[mu];
    // 1/2 [A,B] restricted to the Q-Q sector: moving the generators past the
    // odd coefficients gives [A,B] = - theta_a theta'_b {Q^a, Q^b}
    for (std::size_t i = 0; i < nq; ++i)
      for (std::size_t j = 0; j < nq; ++j) {
        Rational coeff = rat(-1, 2) * m.qq[i][j][mu];
        if (coeff == 0) continue;
        x += coeff * (a.th[i] * b.th[j]);
      }
    out.x.push_back(x);
  }
  return out;
}

}  // namespace superkit
