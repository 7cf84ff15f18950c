#include "superkit/vectorfield.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superkit/supermatrix.hpp"

namespace superkit {

SuperVectorField::SuperVectorField(const Context& ctx, Parity parity,
                                   std::map<SymbolId, SuperExpr> coeffs)
    : ctx_(ctx), parity_(parity) {
  for (auto& [a, e] : coeffs) {
    const SymbolInfo& si = ctx.info(a);
    if (si.kind != SymbolKind::Coordinate)
      fail(ErrorCode::InvalidTarget,
           "vector field coefficient on non-coordinate '" + si.name + "'");
    if (e.is_zero()) continue;
    if (!e.context().same(ctx))
      fail(ErrorCode::ContextMismatch, "coefficient from another context");
    if (!e.homogeneous(parity + si.parity))
      fail(ErrorCode::ParityUndetermined,
           "coefficient at '" + si.name + "' breaks homogeneity of the field");
    coeffs_.emplace(a, e);
  }
}

SuperVectorField SuperVectorField::d(const Context& ctx, SymbolId coord) {
  std::map<SymbolId, SuperExpr> m;
  m.emplace(coord, SuperExpr::constant(ctx, 1));
  return SuperVectorField(ctx, ctx.info(coord).parity, std::move(m));
}

SuperVectorField SuperVectorField::zero(const Context& ctx, Parity parity) {
  return SuperVectorField(ctx, parity, {});
}

SuperExpr SuperVectorField::coeff(SymbolId a) const {
  auto it = coeffs_.find(a);
  return it == coeffs_.end() ? SuperExpr::zero(ctx_) : it->second;
}

SuperExpr SuperVectorField::apply(const SuperExpr& f) const {
  SuperExpr r = SuperExpr::zero(ctx_);
  for (const auto& [a, e] : coeffs_) r += e * partial(f, a);
  return r;
}

SuperVectorField SuperVectorField::operator-() const {
  SuperVectorField r = *this;
  for (auto& [a, e] : r.coeffs_) e = -e;
  return r;
}

SuperVectorField operator+(const SuperVectorField& x,
                           const SuperVectorField& y) {
  if (!x.ctx_.same(y.ctx_))
    fail(ErrorCode::ContextMismatch, "vector fields from different contexts");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.parity_ != y.parity_)
    fail(ErrorCode::ParityUndetermined,
         "sum of vector fields of different parity");
  std::map<SymbolId, SuperExpr> m = x.coeffs_;
  for (const auto& [a, e] : y.coeffs_) {
    auto it = m.find(a);
    if (it == m.end())
      m.emplace(a, e);
    else {
      it->second += e;
      if (it->second.is_zero()) m.erase(it);
    }
  }
  return SuperVectorField(x.ctx_, x.parity_, std::move(m));
}

SuperVectorField operator-(const SuperVectorField& x,
                           const SuperVectorField& y) {
  return x + (-y);
}

SuperVectorField operator*(const SuperExpr& f, const SuperVectorField& x) {
  if (f.is_zero()) return SuperVectorField::zero(x.ctx_, x.parity_);
  auto fp = f.parity();
  if (!fp)
    fail(ErrorCode::ParityUndetermined,
         "coefficient must be homogeneous to scale a vector field");
  std::map<SymbolId, SuperExpr> m;
  for (const auto& [a, e] : x.coeffs_) {
    SuperExpr prod = f * e;
    if (!prod.is_zero()) m.emplace(a, prod);
  }
  return SuperVectorField(x.ctx_, *fp + x.parity_, std::move(m));
}

SuperVectorField operator*(const Rational& c, const SuperVectorField& x) {
  if (c == 0) return SuperVectorField::zero(x.ctx_, x.parity_);
  std::map<SymbolId, SuperExpr> m;
  for (const auto& [a, e] : x.coeffs_) m.emplace(a, c * e);
  return SuperVectorField(x.ctx_, x.parity_, std::move(m));
}

bool operator==(const SuperVectorField& x, const SuperVectorField& y) {
  if (x.is_zero() && y.is_zero()) return true;
  if (!x.ctx_.same(y.ctx_)) return false;
  return x.parity_ == y.parity_ && x.coeffs_ == y.coeffs_;
}

std::string to_string(const SuperVectorField& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, e] : x.coeffs()) {
    if (!first) out << " + ";
    first = false;
    std::string c = to_string(e);
    bool simple = e.terms().size() == 1;
    if (c == "1") {
      out << "d/d(" << x.context().info(a).name << ")";
    } else {
      if (simple)
        out << c;
      else
        out << "(" << c << ")";
      out << "*d/d(" << x.context().info(a).name << ")";
    }
  }
  return out.str();
}

SuperVectorField superbracket(const SuperVectorField& x,
                              const SuperVectorField& y) {
  if (!x.context().same(y.context()))
    fail(ErrorCode::ContextMismatch, "vector fields from different contexts");
  int koszul = (is_odd(x.parity()) && is_odd(y.parity())) ? -1 : 1;
  std::set<SymbolId> keys;
  for (const auto& [a, e] : x.coeffs()) keys.insert(a);
  for (const auto& [a, e] : y.coeffs()) keys.insert(a);
  std::map<SymbolId, SuperExpr> m;
  for (SymbolId a : keys) {
    SuperExpr c = x.apply(y.coeff(a)) - Rational(koszul) * y.apply(x.coeff(a));
    if (!c.is_zero()) m.emplace(a, c);
  }
  return SuperVectorField(x.context(), x.parity() + y.parity(), std::move(m));
}

SuperExpr susy_variation(const SuperVectorField& x, const SuperExpr& phi,
                         SymbolId eps) {
  const Context& ctx = x.context();
  const SymbolInfo& si = ctx.info(eps);
  if (si.kind != SymbolKind::Parameter || si.parity != Parity::Odd)
    fail(ErrorCode::InvalidParameter,
         "'" + si.name + "' is not an odd parameter");
  return SuperExpr::symbol(ctx, eps) * x.apply(phi);
}

bool killing_check(const SuperVectorField& x,
                   const std::vector<std::vector<Rational>>& metric) {
  const Context& ctx = x.context();
  if (!ctx.purely_even_chart())
    fail(ErrorCode::UnsupportedChart,
         "Killing check requires a purely even chart");
  std::vector<SymbolId> coords = ctx.coordinates();
  std::size_t n = coords.size();
  if (metric.size() != n)
    fail(ErrorCode::DimensionMismatch, "metric size does not match the chart");
  std::vector<SuperExpr> lowered(n, SuperExpr::zero(ctx));
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu)
      lowered[nu] += metric[nu][mu] * x.coeff(coords[mu]);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu) {
      SuperExpr k = partial(lowered[nu], coords[mu]) +
                    partial(lowered[mu], coords[nu]);
      if (!k.is_zero()) return false;
    }
  return true;
}

// ------------------------------------------------------------ distributions

Distribution::Distribution(std::vector<SuperVectorField> span,
                           std::vector<SuperVectorField> complement)
    : span_(std::move(span)), complement_(std::move(complement)) {
  if (span_.empty())
    fail(ErrorCode::DegenerateDistribution, "empty distribution");
  ctx_ = span_.front().context();
  chart_ = ctx_.coordinates();
  std::vector<const SuperVectorField*> all;
  for (const auto& f : span_) all.push_back(&f);
  for (const auto& f : complement_) all.push_back(&f);
  if (all.size() != chart_.size())
    fail(ErrorCode::DegenerateDistribution,
         "span and complement do not total the chart dimension");
  for (const auto* f : all)
    if (!f->context().same(ctx_))
      fail(ErrorCode::ContextMismatch, "fields from different contexts");

  // free-basis check through the Berezinian of the coefficient matrix,
  // rows/columns sorted even-first so the blocks are parity-homogeneous
  std::vector<const SuperVectorField*> rows;
  for (const auto* f : all)
    if (f->parity() == Parity::Even) rows.push_back(f);
  std::size_t p = rows.size();
  for (const auto* f : all)
    if (f->parity() == Parity::Odd) rows.push_back(f);
  std::vector<SymbolId> cols;
  for (SymbolId c : chart_)
    if (ctx_.info(c).parity == Parity::Even) cols.push_back(c);
  std::size_t pc = cols.size();
  for (SymbolId c : chart_)
    if (ctx_.info(c).parity == Parity::Odd) cols.push_back(c);
  if (p != pc)
    fail(ErrorCode::DegenerateDistribution,
         "parity counts of basis fields do not match the chart");
  SuperMatrix::Block a(p), b(p), c(rows.size() - p), d(rows.size() - p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols.size(); ++k) {
      SuperExpr e = rows[i]->coeff(cols[k]);
      if (i < p) {
        (k < pc ? a[i] : b[i]).push_back(e);
      } else {
        (k < pc ? c[i - p] : d[i - p]).push_back(e);
      }
    }
  try {
    berezinian(SuperMatrix(ctx_, a, b, c, d));
  } catch (const Error& err) {
    fail(ErrorCode::DegenerateDistribution,
         std::string("span + complement is not a free basis: ") + err.what());
  }
}

std::vector<SuperExpr> Distribution::solve(const SuperVectorField& z) const {
  // Solve z = sum_i c_i B_i with coefficients on the left. Row operations
  // multiply equations on the right, which never reorders the unknowns;
  // pivots must be even units.
  std::vector<const SuperVectorField*> basis;
  for (const auto& f : span_) basis.push_back(&f);
  for (const auto& f : complement_) basis.push_back(&f);
  std::size_t n = basis.size();

  struct Row {
    std::vector<SuperExpr> m;
    SuperExpr rhs;
  };
  std::vector<Row> rows;
  for (SymbolId a : chart_) {
    Row r;
    for (const auto* f : basis) r.m.push_back(f->coeff(a));
    r.rhs = z.coeff(a);
    rows.push_back(std::move(r));
  }

  auto is_unit = [](const SuperExpr& e) {
    return e.scalar_part() != 0 &&
           (e - SuperExpr::constant(e.context(), e.scalar_part()))
               .is_nilpotent() &&
           e.homogeneous(Parity::Even);
  };

  std::vector<std::ptrdiff_t> pivot_row(n, -1);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < n && next_row < rows.size(); ++col) {
    std::size_t r = next_row;
    while (r < rows.size() && !is_unit(rows[r].m[col])) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[next_row]);
    Row& pr = rows[next_row];
    SuperExpr inv = invert_even(pr.m[col]);
    for (auto& e : pr.m) e = e * inv;
    pr.rhs = pr.rhs * inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == next_row) continue;
      SuperExpr f = rows[rr].m[col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        rows[rr].m[j] = rows[rr].m[j] - pr.m[j] * f;
      rows[rr].rhs = rows[rr].rhs - pr.rhs * f;
    }
    pivot_row[col] = static_cast<std::ptrdiff_t>(next_row);
    ++next_row;
  }

  std::vector<SuperExpr> out(n, SuperExpr::zero(ctx_));
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row[col] < 0)
      fail(ErrorCode::DegenerateDistribution,
           "could not triangulate the basis coefficient matrix");
    out[col] = rows[pivot_row[col]].rhs;
  }
  // exact residual check
  for (std::size_t k = 0; k < chart_.size(); ++k) {
    SuperExpr acc = SuperExpr::zero(ctx_);
    for (std::size_t i = 0; i < n; ++i)
      acc += out[i] * basis[i]->coeff(chart_[k]);
    if (!(acc == z.coeff(chart_[k])))
      fail(ErrorCode::DegenerateDistribution,
           "basis expansion residual is nonzero");
  }
  return out;
}

SuperVectorField frobenius_curvature(const Distribution& dist,
                                     const SuperVectorField& x,
                                     const SuperVectorField& y) {
  const Context& ctx = dist.context();
  std::size_t ns = dist.span().size();
  for (const SuperVectorField* f : {&x, &y}) {
    auto c = dist.solve(*f);
    for (std::size_t i = ns; i < c.size(); ++i)
      if (!c[i].is_zero())
        fail(ErrorCode::UnsupportedArgument,
             "argument of the curvature is not in the distribution");
  }
  SuperVectorField z = superbracket(x, y);
  std::vector<SuperExpr> c = dist.solve(z);
  // N-component: sum over the complement part of the basis
  SuperVectorField r = SuperVectorField::zero(ctx, z.parity());
  for (std::size_t i = ns; i < c.size(); ++i) {
    const SuperVectorField& b = dist.complement()[i - ns];
    if (c[i].is_zero()) continue;
    std::map<SymbolId, SuperExpr> m;
    for (const auto& [a, e] : b.coeffs()) {
      SuperExpr prod = c[i] * e;
      if (!prod.is_zero()) m.emplace(a, prod);
    }
    r = r + SuperVectorField(ctx, z.parity(), std::move(m));
  }
  return r;
}

bool is_maximally_nonintegrable(const Distribution& dist) {
  const Context& ctx = dist.context();
  std::size_t n = dist.span().size();
  std::vector<SymbolId> chart = ctx.coordinates();

  // rows indexed by (j, coordinate), columns by i: the characteristic
  // condition sum_i x_i R(B_i, B_j) = 0 with x_i on the left
  std::vector<std::vector<SuperExpr>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SuperVectorField> r_ij;
    for (std::size_t i = 0; i < n; ++i)
      r_ij.push_back(
          frobenius_curvature(dist, dist.span()[i], dist.span()[j]));
    for (SymbolId a : chart) {
      std::vector<SuperExpr> row;
      bool all_zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        row.push_back(r_ij[i].coeff(a));
        all_zero = all_zero && row.back().is_zero();
      }
      if (!all_zero) rows.push_back(std::move(row));
    }
  }

  auto is_unit = [](const SuperExpr& e) {
    return e.scalar_part() != 0 &&
           (e - SuperExpr::constant(e.context(), e.scalar_part()))
               .is_nilpotent() &&
           e.homogeneous(Parity::Even);
  };

  std::size_t next_row = 0;
  std::size_t pivots = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = next_row;
    while (r < rows.size() && !is_unit(rows[r][col])) ++r;
    if (r == rows.size()) {
      bool column_zero = true;
      for (std::size_t rr = next_row; rr < rows.size(); ++rr)
        column_zero = column_zero && rows[rr][col].is_zero();
      if (column_zero) return false;  // kernel direction exists
      fail(ErrorCode::DegenerateDistribution,
           "curvature tensor has no even-unit pivot; cannot decide");
    }
    std::swap(rows[r], rows[next_row]);
    SuperExpr inv = invert_even(rows[next_row][col]);
    for (auto& e : rows[next_row]) e = e * inv;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == next_row) continue;
      SuperExpr f = rows[rr][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        rows[rr][j] = rows[rr][j] - rows[next_row][j] * f;
    }
    ++pivots;
    ++next_row;
  }
  return pivots == n;
}

// --------------------------------------------------------- Poincare sector

MinkowskiChart build_minkowski_chart() {
  MinkowskiChart m;
  for (int mu = 0; mu < 4; ++mu)
    m.x.push_back(m.ctx.coordinate("x" + std::to_string(mu), Parity::Even));
  m.eta.assign(4, std::vector<Rational>(4, Rational(0)));
  m.eta[0][0] = -1;
  for (int i = 1; i < 4; ++i) m.eta[i][i] = 1;
  for (int mu = 0; mu < 4; ++mu)
    m.p.push_back(SuperVectorField::d(m.ctx, m.x[mu]));
  m.j.assign(4, {});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      // J^{mu nu} = x^mu eta^{nu l} d_l - x^nu eta^{mu l} d_l, eta diagonal
      SuperVectorField f =
          m.eta[nu][nu] * (SuperExpr::symbol(m.ctx, m.x[mu]) *
                           SuperVectorField::d(m.ctx, m.x[nu])) -
          m.eta[mu][mu] * (SuperExpr::symbol(m.ctx, m.x[nu]) *
                           SuperVectorField::d(m.ctx, m.x[mu]));
      m.j[mu].push_back(f);
    }
  return m;
}

}  // namespace superkit
