#pragma once

#include <map>
#include <span>
#include <vector>

#include "superkit/expr.hpp"

namespace superkit {

/// Block-graded matrix over SuperExpr. The diagonal blocks A (p x p) and
/// D (q x q) hold even entries, the off-diagonal blocks B (p x q) and
/// C (q x p) hold odd entries; zero is allowed anywhere.
class SuperMatrix {
 public:
  using Block = std::vector<std::vector<SuperExpr>>;

  SuperMatrix(const Context& ctx, Block a, Block b, Block c, Block d);

  static SuperMatrix identity(const Context& ctx, std::size_t p,
                              std::size_t q);

  std::size_t even_size() const { return p_; }
  std::size_t odd_size() const { return q_; }
  const Context& context() const { return ctx_; }

  const Block& a() const { return a_; }
  const Block& b() const { return b_; }
  const Block& c() const { return c_; }
  const Block& d() const { return d_; }

  /// Entry in full-matrix indexing, rows/columns 0..p+q-1 with the even block
  /// first.
  const SuperExpr& entry(std::size_t i, std::size_t j) const;

  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);

 private:
  Context ctx_;
  std::size_t p_ = 0, q_ = 0;
  Block a_, b_, c_, d_;
};

/// Leibniz determinant of a square matrix of even (hence commuting) entries.
SuperExpr det_even(const Context& ctx,
                   const std::vector<std::vector<SuperExpr>>& m);

/// Inverse of a square matrix of even entries whose determinant is an even
/// unit; Gauss-Jordan with invert_even on pivots of nonzero scalar part.
std::vector<std::vector<SuperExpr>> invert_even_matrix(
    const Context& ctx, std::vector<std::vector<SuperExpr>> m);

/// Ber(J) = det(A - B D^{-1} C) det(D)^{-1}, exact.
SuperExpr berezinian(const SuperMatrix& j);

/// Jacobian matrix of a coordinate transform in the block convention
/// J = ( dy/dx  -dy/dxi ; dtheta/dx  dtheta/dxi ): rows are images of the
/// listed coordinates (even first), columns the coordinates themselves.
/// Coordinates absent from the map transform identically.
SuperMatrix jacobian(const Context& ctx,
                     const std::map<SymbolId, SuperExpr>& transform,
                     std::span<const SymbolId> old_coords);

}  // namespace superkit
