#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "superkit/checks.hpp"
#include "superkit/ratmatrix.hpp"

namespace superkit {

/// Concrete gamma-matrix representation with index convention
/// (gamma^mu)_alpha{}^beta and metric eta = diag(-1,+1,+1,+1).
struct GammaRep {
  std::array<RatMatrix, 4> gamma;
  std::vector<Rational> eta_diag{-1, 1, 1, 1};

  /// The real Majorana representation used throughout.
  static GammaRep majorana();
};

/// {gamma^mu, gamma^nu} = 2 eta^{mu nu} 1 for all ten pairs, exact.
CheckList verify_clifford_dirac(const GammaRep& rep);

/// gamma^{mu nu} = (gamma^mu gamma^nu - gamma^nu gamma^mu)/2.
RatMatrix gamma_antisym(const GammaRep& rep, int mu, int nu);

/// Spin generator Sigma^{mu nu} = gamma^{mu nu}/2.
RatMatrix sigma(const GammaRep& rep, int mu, int nu);

/// [Sigma^{mu nu}, Sigma^{rho sigma}] closes on the Lorentz structure
/// constants shared with the Killing-field bracket check.
CheckList verify_lorentz_spin_rep(const GammaRep& rep);

/// Charge conjugation: C gamma^mu C^{-1} = -(gamma^mu)^t, realised by -gamma^0
/// in the Majorana representation, plus the symmetric tensors
/// (C gamma^mu)^{alpha beta} = C^{alpha delta} (gamma^mu)_delta{}^beta.
struct ChargeConjugation {
  RatMatrix c;
  std::array<RatMatrix, 4> c_gamma;
};

ChargeConjugation charge_conjugation(const GammaRep& rep);

/// gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3 with indices lowered by eta.
RatMatrix gamma5(const GammaRep& rep);

/// delta_omega u_alpha = 1/4 omega_{mu nu} (gamma^{mu nu})_alpha{}^beta u_beta
/// for an antisymmetric omega.
std::array<Rational, 4> infinitesimal_lorentz_on_spinor(
    const GammaRep& rep, const RatMatrix& omega,
    const std::array<Rational, 4>& u);

/// (gamma^mu d_mu - m)(gamma^nu d_nu + m) = (eta^{mu nu} d_mu d_nu - m^2) 1,
/// verified in the commutative polynomial ring of the formal d_mu symbols
/// with matrix coefficients.
CheckList dirac_square(const GammaRep& rep, const Rational& m);

/// Numeric matrix exponential (scaling and squaring with a truncated series).
/// The module's only floating-point operation.
using DMat4 = std::array<std::array<double, 4>, 4>;
DMat4 exp_matrix(const DMat4& m, double rel_tol = 1e-12);
DMat4 to_double(const RatMatrix& m);

}  // namespace superkit
