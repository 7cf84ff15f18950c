#pragma once

#include <map>
#include <vector>

#include "superkit/expr.hpp"

namespace superkit {

/// Graded derivation X = sum_a X^a d/d(a) on the chart of a Context, with
/// coefficients written on the left of the coordinate derivatives. For a
/// homogeneous field the coefficient at coordinate a has parity
/// parity(X) + parity(a).
class SuperVectorField {
 public:
  SuperVectorField(const Context& ctx, Parity parity,
                   std::map<SymbolId, SuperExpr> coeffs);

  /// Unit coordinate derivative d/d(coord).
  static SuperVectorField d(const Context& ctx, SymbolId coord);
  static SuperVectorField zero(const Context& ctx, Parity parity);

  const Context& context() const { return ctx_; }
  Parity parity() const { return parity_; }
  const std::map<SymbolId, SuperExpr>& coeffs() const { return coeffs_; }
  SuperExpr coeff(SymbolId a) const;
  bool is_zero() const { return coeffs_.empty(); }

  SuperExpr apply(const SuperExpr& f) const;

  SuperVectorField operator-() const;
  friend SuperVectorField operator+(const SuperVectorField& x,
                                    const SuperVectorField& y);
  friend SuperVectorField operator-(const SuperVectorField& x,
                                    const SuperVectorField& y);
  /// Left multiplication by a homogeneous coefficient; parities add.
  friend SuperVectorField operator*(const SuperExpr& f,
                                    const SuperVectorField& x);
  friend SuperVectorField operator*(const Rational& c,
                                    const SuperVectorField& x);
  friend bool operator==(const SuperVectorField& x, const SuperVectorField& y);

 private:
  Context ctx_;
  Parity parity_;
  std::map<SymbolId, SuperExpr> coeffs_;
};

std::string to_string(const SuperVectorField& x);

/// Super Lie bracket in coefficient form:
/// [X,Y]^a = X(Y^a) - (-1)^{X~ Y~} Y(X^a). Equals the commutator or
/// anticommutator of the operators according to the parities.
SuperVectorField superbracket(const SuperVectorField& x,
                              const SuperVectorField& y);

/// eps * X(phi) for an odd parameter eps.
SuperExpr susy_variation(const SuperVectorField& x, const SuperExpr& phi,
                         SymbolId eps);

/// Killing equation on a purely even chart with a constant metric:
/// d_mu X_nu + d_nu X_mu = 0 identically.
bool killing_check(const SuperVectorField& x,
                   const std::vector<std::vector<Rational>>& metric);

/// A distribution together with an explicit complement, so that
/// span + complement is a free basis of vector fields on the chart (verified
/// through the Berezinian of the coefficient matrix).
class Distribution {
 public:
  Distribution(std::vector<SuperVectorField> span,
               std::vector<SuperVectorField> complement);

  const std::vector<SuperVectorField>& span() const { return span_; }
  const std::vector<SuperVectorField>& complement() const {
    return complement_;
  }
  const Context& context() const { return ctx_; }

  /// Coefficients of Z in the (span, complement) basis, span entries first.
  std::vector<SuperExpr> solve(const SuperVectorField& z) const;

 private:
  Context ctx_;
  std::vector<SuperVectorField> span_, complement_;
  std::vector<SymbolId> chart_;
};

/// Frobenius curvature R(X,Y): the component of [X,Y] along the complement,
/// for X, Y in the span of the distribution.
SuperVectorField frobenius_curvature(const Distribution& dist,
                                     const SuperVectorField& x,
                                     const SuperVectorField& y);

/// True iff no nonzero X in the distribution has R(X,-) = 0 on the spanning
/// set; decided by exact linear algebra on the curvature coefficients.
bool is_maximally_nonintegrable(const Distribution& dist);

// ----------------------------------------------------- Poincare sector

/// Minkowski chart R^{3,1} with eta = diag(-1,+1,+1,+1), its translation
/// generators and rotation/boost generators
/// J^{mu nu} = x^mu eta^{nu l} d_l - x^nu eta^{mu l} d_l.
struct MinkowskiChart {
  Context ctx;
  std::vector<SymbolId> x;
  std::vector<std::vector<Rational>> eta;
  std::vector<SuperVectorField> p;
  std::vector<std::vector<SuperVectorField>> j;
};

MinkowskiChart build_minkowski_chart();

}  // namespace superkit
