#include "superkit/supermatrix.hpp"

#include <algorithm>
#include <functional>

namespace superkit {

namespace {

void check_block(const Context& ctx, const SuperMatrix::Block& blk,
                 std::size_t rows, std::size_t cols, Parity parity,
                 const char* name) {
  if (blk.size() != rows)
    fail(ErrorCode::DimensionMismatch, std::string("block ") + name +
                                           " has wrong row count");
  for (const auto& row : blk) {
    if (row.size() != cols)
      fail(ErrorCode::DimensionMismatch, std::string("block ") + name +
                                             " has wrong column count");
    for (const auto& e : row) {
      if (!e.is_zero() && !e.context().same(ctx))
        fail(ErrorCode::ContextMismatch, "matrix entry from another context");
      if (!e.homogeneous(parity))
        fail(ErrorCode::ParityViolation,
             std::string("entries of block ") + name + " must be " +
                 to_string(parity));
    }
  }
}

}  // namespace

SuperMatrix::SuperMatrix(const Context& ctx, Block a, Block b, Block c,
                         Block d)
    : ctx_(ctx),
      p_(a.size()),
      q_(d.size()),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)) {
  check_block(ctx_, a_, p_, p_, Parity::Even, "A");
  check_block(ctx_, b_, p_, q_, Parity::Odd, "B");
  check_block(ctx_, c_, q_, p_, Parity::Odd, "C");
  check_block(ctx_, d_, q_, q_, Parity::Even, "D");
}

SuperMatrix SuperMatrix::identity(const Context& ctx, std::size_t p,
                                  std::size_t q) {
  auto zero = SuperExpr::zero(ctx);
  auto one = SuperExpr::constant(ctx, 1);
  Block a(p, std::vector<SuperExpr>(p, zero));
  Block b(p, std::vector<SuperExpr>(q, zero));
  Block c(q, std::vector<SuperExpr>(p, zero));
  Block d(q, std::vector<SuperExpr>(q, zero));
  for (std::size_t i = 0; i < p; ++i) a[i][i] = one;
  for (std::size_t i = 0; i < q; ++i) d[i][i] = one;
  return SuperMatrix(ctx, a, b, c, d);
}

const SuperExpr& SuperMatrix::entry(std::size_t i, std::size_t j) const {
  if (i < p_) return j < p_ ? a_[i][j] : b_[i][j - p_];
  return j < p_ ? c_[i - p_][j] : d_[i - p_][j - p_];
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  if (!x.ctx_.same(y.ctx_))
    fail(ErrorCode::ContextMismatch, "matrix contexts differ");
  if (x.p_ != y.p_ || x.q_ != y.q_)
    fail(ErrorCode::DimensionMismatch, "block sizes differ");
  std::size_t n = x.p_ + x.q_;
  std::vector<std::vector<SuperExpr>> full(
      n, std::vector<SuperExpr>(n, SuperExpr::zero(x.ctx_)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SuperExpr s = SuperExpr::zero(x.ctx_);
      for (std::size_t k = 0; k < n; ++k) s += x.entry(i, k) * y.entry(k, j);
      full[i][j] = s;
    }
  auto slice = [&](std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1) {
    SuperMatrix::Block blk;
    for (std::size_t i = r0; i < r1; ++i)
      blk.emplace_back(full[i].begin() + c0, full[i].begin() + c1);
    return blk;
  };
  return SuperMatrix(x.ctx_, slice(0, x.p_, 0, x.p_), slice(0, x.p_, x.p_, n),
                     slice(x.p_, n, 0, x.p_), slice(x.p_, n, x.p_, n));
}

SuperExpr det_even(const Context& ctx,
                   const std::vector<std::vector<SuperExpr>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n)
      fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    for (const auto& e : row)
      if (!e.homogeneous(Parity::Even))
        fail(ErrorCode::ParityViolation, "determinant requires even entries");
  }
  if (n == 0) return SuperExpr::constant(ctx, 1);
  // cofactor expansion along the first column; entries commute
  std::function<SuperExpr(const std::vector<std::size_t>&,
                          const std::vector<std::size_t>&)>
      rec = [&](const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) -> SuperExpr {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    SuperExpr acc = SuperExpr::zero(ctx);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (m[rows[k]][cols[0]].is_zero()) continue;
      std::vector<std::size_t> sub_rows;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != k) sub_rows.push_back(rows[i]);
      std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
      SuperExpr minor = rec(sub_rows, sub_cols);
      SuperExpr term = m[rows[k]][cols[0]] * minor;
      acc += (k % 2) ? -term : term;
    }
    return acc;
  };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return rec(idx, idx);
}

std::vector<std::vector<SuperExpr>> invert_even_matrix(
    const Context& ctx, std::vector<std::vector<SuperExpr>> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  std::vector<std::vector<SuperExpr>> inv(
      n, std::vector<SuperExpr>(n, SuperExpr::zero(ctx)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = SuperExpr::constant(ctx, 1);

  auto is_unit = [](const SuperExpr& e) {
    if (e.scalar_part() == 0) return false;
    SuperExpr rest = e - SuperExpr::constant(e.context(), e.scalar_part());
    return rest.is_nilpotent();
  };

  for (std::size_t col = 0; col < n; ++col) {
    // pivot with invertible (unit scalar part) entry; nilpotent corrections
    // make naive pivoting fail
    std::size_t piv = col;
    while (piv < n && !is_unit(m[piv][col])) ++piv;
    if (piv == n)
      fail(ErrorCode::SingularBlock,
           "no invertible pivot in column " + std::to_string(col));
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    SuperExpr pinv = invert_even(m[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = pinv * m[col][j];
      inv[col][j] = pinv * inv[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      SuperExpr f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = m[r][j] - f * m[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

SuperExpr berezinian(const SuperMatrix& j) {
  const Context& ctx = j.context();
  std::size_t p = j.even_size(), q = j.odd_size();
  if (q == 0) return det_even(ctx, j.a());
  SuperExpr det_d = det_even(ctx, j.d());
  if (det_d.scalar_part() == 0)
    fail(ErrorCode::SingularBlock, "block D is not invertible");
  if (p == 0) return invert_even(det_d);
  auto dinv = invert_even_matrix(ctx, j.d());
  // S = A - B D^{-1} C
  std::vector<std::vector<SuperExpr>> s(
      p, std::vector<SuperExpr>(p, SuperExpr::zero(ctx)));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      SuperExpr acc = j.a()[i][k];
      for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < q; ++c)
          acc = acc - j.b()[i][r] * dinv[r][c] * j.c()[c][k];
      s[i][k] = acc;
    }
  return det_even(ctx, s) * invert_even(det_d);
}

SuperMatrix jacobian(const Context& ctx,
                     const std::map<SymbolId, SuperExpr>& transform,
                     std::span<const SymbolId> old_coords) {
  std::vector<SymbolId> ev, od;
  for (SymbolId s : old_coords) {
    const SymbolInfo& si = ctx.info(s);
    if (si.kind == SymbolKind::Function)
      fail(ErrorCode::InvalidTarget, "'" + si.name + "' is not a coordinate");
    (si.parity == Parity::Even ? ev : od).push_back(s);
  }
  auto image = [&](SymbolId s) {
    auto it = transform.find(s);
    SuperExpr img =
        it == transform.end() ? SuperExpr::symbol(ctx, s) : it->second;
    if (!img.homogeneous(ctx.info(s).parity))
      fail(ErrorCode::ParityViolation,
           "transform must preserve the parity of '" + ctx.info(s).name + "'");
    return img;
  };
  SuperMatrix::Block a(ev.size()), b(ev.size()), c(od.size()), d(od.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    SuperExpr y = image(ev[i]);
    for (SymbolId x : ev) a[i].push_back(partial(y, x));
    for (SymbolId xi : od) b[i].push_back(-partial(y, xi));
  }
  for (std::size_t i = 0; i < od.size(); ++i) {
    SuperExpr th = image(od[i]);
    for (SymbolId x : ev) c[i].push_back(partial(th, x));
    for (SymbolId xi : od) d[i].push_back(partial(th, xi));
  }
  return SuperMatrix(ctx, a, b, c, d);
}

}  // namespace superkit
