#include "superkit/spinor.hpp"

#include <cmath>
#include <functional>

#include "superkit/lorentz.hpp"

namespace superkit {

GammaRep GammaRep::majorana() {
  auto mat = [](std::array<std::array<int, 4>, 4> rows) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
  };
  GammaRep rep;
  rep.gamma[0] = mat({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}});
  rep.gamma[1] = mat({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}});
  rep.gamma[2] = mat({{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}});
  rep.gamma[3] = mat({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}});
  return rep;
}

CheckList verify_clifford_dirac(const GammaRep& rep) {
  CheckList list;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      RatMatrix anti = rep.gamma[mu] * rep.gamma[nu] +
                       rep.gamma[nu] * rep.gamma[mu];
      RatMatrix expect = RatMatrix(4, 4);
      if (mu == nu) expect = (2 * rep.eta_diag[mu]) * RatMatrix::identity(4);
      bool ok = anti == expect;
      list.add("clifford-dirac(" + std::to_string(mu) + "," +
                   std::to_string(nu) + ")",
               ok, ok ? "" : "anticommutator = " + to_string(anti));
    }
  return list;
}

RatMatrix gamma_antisym(const GammaRep& rep, int mu, int nu) {
  return rat(1, 2) *
         (rep.gamma[mu] * rep.gamma[nu] - rep.gamma[nu] * rep.gamma[mu]);
}

RatMatrix sigma(const GammaRep& rep, int mu, int nu) {
  return rat(1, 2) * gamma_antisym(rep, mu, nu);
}

CheckList verify_lorentz_spin_rep(const GammaRep& rep) {
  CheckList list;
  std::function<RatMatrix(int, int)> s = [&](int a, int b) {
    return sigma(rep, a, b);
  };
  RatMatrix zero(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int r = 0; r < 4; ++r)
        for (int sg = 0; sg < 4; ++sg) {
          RatMatrix lhs = s(mu, nu) * s(r, sg) - s(r, sg) * s(mu, nu);
          RatMatrix rhs =
              lorentz_bracket_rhs(s, rep.eta_diag, mu, nu, r, sg, zero);
          bool ok = lhs == rhs;
          if (!ok || (mu < nu && r < sg))
            list.add("spin-rep(" + std::to_string(mu) + std::to_string(nu) +
                         "," + std::to_string(r) + std::to_string(sg) + ")",
                     ok);
        }
  return list;
}

ChargeConjugation charge_conjugation(const GammaRep& rep) {
  auto satisfies = [&](const RatMatrix& c) {
    RatMatrix cinv = c.inverse();
    for (int mu = 0; mu < 4; ++mu)
      if (!(c * rep.gamma[mu] * cinv == Rational(-1) * rep.gamma[mu].transpose()))
        return false;
    return true;
  };
  RatMatrix minus_g0 = Rational(-1) * rep.gamma[0];
  RatMatrix candidate(4, 4);
  if (satisfies(minus_g0))
    candidate = minus_g0;
  else if (satisfies(rep.gamma[0]))
    candidate = rep.gamma[0];
  else
    fail(ErrorCode::RepresentationIncompatible,
         "neither +gamma^0 nor -gamma^0 conjugates to the transpose");
  ChargeConjugation cc;
  cc.c = candidate;
  for (int mu = 0; mu < 4; ++mu) {
    cc.c_gamma[mu] = cc.c * rep.gamma[mu];
    if (!(cc.c_gamma[mu] == cc.c_gamma[mu].transpose()))
      fail(ErrorCode::RepresentationIncompatible,
           "(C gamma^" + std::to_string(mu) + ") is not symmetric");
  }
  return cc;
}

RatMatrix gamma5(const GammaRep& rep) {
  RatMatrix r = RatMatrix::identity(4);
  for (int mu = 0; mu < 4; ++mu) r = r * (rep.eta_diag[mu] * rep.gamma[mu]);
  return r;
}

std::array<Rational, 4> infinitesimal_lorentz_on_spinor(
    const GammaRep& rep, const RatMatrix& omega,
    const std::array<Rational, 4>& u) {
  if (omega.rows() != 4 || omega.cols() != 4)
    fail(ErrorCode::DimensionMismatch, "omega must be 4x4");
  if (!(omega == Rational(-1) * omega.transpose()))
    fail(ErrorCode::InvalidParameter, "omega must be antisymmetric");
  RatMatrix op(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      if (omega(mu, nu) == 0) continue;
      op = op + omega(mu, nu) * gamma_antisym(rep, mu, nu);
    }
  std::array<Rational, 4> out{};
  for (int a = 0; a < 4; ++a) {
    Rational acc(0);
    for (int b = 0; b < 4; ++b) acc += op(a, b) * u[b];
    out[a] = acc / 4;
  }
  return out;
}

CheckList dirac_square(const GammaRep& rep, const Rational& m) {
  // polynomial in the commuting formal symbols d_0..d_3 with 4x4
  // matrix coefficients, keyed by the derivative multi-index
  using Key = std::array<int, 4>;
  auto mono = [](int mu) {
    Key k{0, 0, 0, 0};
    k[mu] = 1;
    return k;
  };
  std::map<Key, RatMatrix> left, right, product, expected;
  Key unit{0, 0, 0, 0};
  left[unit] = (-m) * RatMatrix::identity(4);
  right[unit] = m * RatMatrix::identity(4);
  for (int mu = 0; mu < 4; ++mu) {
    left[mono(mu)] = rep.gamma[mu];
    right[mono(mu)] = rep.gamma[mu];
  }
  for (const auto& [ka, ma] : left)
    for (const auto& [kb, mb] : right) {
      Key k;
      for (int i = 0; i < 4; ++i) k[i] = ka[i] + kb[i];
      auto [it, inserted] = product.emplace(k, ma * mb);
      if (!inserted) it->second = it->second + ma * mb;
    }
  expected[unit] = (-m * m) * RatMatrix::identity(4);
  for (int mu = 0; mu < 4; ++mu) {
    Key k{0, 0, 0, 0};
    k[mu] = 2;
    expected[k] = rep.eta_diag[mu] * RatMatrix::identity(4);
  }

  CheckList list;
  std::map<Key, RatMatrix> all = product;
  for (const auto& [k, v] : expected) all.emplace(k, RatMatrix(4, 4));
  for (const auto& [k, unused] : all) {
    RatMatrix got(4, 4), want(4, 4);
    if (auto it = product.find(k); it != product.end()) got = it->second;
    if (auto it = expected.find(k); it != expected.end()) want = it->second;
    std::string id = "dirac-square d^(" + std::to_string(k[0]) +
                     std::to_string(k[1]) + std::to_string(k[2]) +
                     std::to_string(k[3]) + ")";
    bool ok = got == want;
    list.add(id, ok, ok ? "" : to_string(got) + " != " + to_string(want));
  }
  return list;
}

// ------------------------------------------------------- float quarantine

DMat4 to_double(const RatMatrix& m) {
  DMat4 r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = m(i, j).get_d();
  return r;
}

namespace {

DMat4 dmul(const DMat4& a, const DMat4& b) {
  DMat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

double dnorm(const DMat4& a) {
  double n = 0;
  for (int i = 0; i < 4; ++i) {
    double row = 0;
    for (int j = 0; j < 4; ++j) row += std::fabs(a[i][j]);
    n = std::max(n, row);
  }
  return n;
}

}  // namespace

DMat4 exp_matrix(const DMat4& m, double rel_tol) {
  double norm = dnorm(m);
  int s = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++s;
  }
  DMat4 t{};
  double scale = std::ldexp(1.0, -s);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = m[i][j] * scale;

  DMat4 sum{};
  for (int i = 0; i < 4; ++i) sum[i][i] = 1.0;
  DMat4 term = sum;
  for (int k = 1; k < 64; ++k) {
    term = dmul(term, t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) term[i][j] /= k;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sum[i][j] += term[i][j];
    if (dnorm(term) < rel_tol * dnorm(sum)) break;
  }
  for (int i = 0; i < s; ++i) sum = dmul(sum, sum);
  return sum;
}

}  // namespace superkit
