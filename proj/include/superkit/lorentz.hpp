#pragma once

#include <functional>

#include "superkit/rational.hpp"

namespace superkit {

/// Right-hand side of the Lorentz commutation relation
///   [G^{mu nu}, G^{rho sigma}] =
///     eta^{nu rho} G^{mu sigma} - eta^{mu rho} G^{nu sigma}
///     - eta^{nu sigma} G^{mu rho} + eta^{mu sigma} G^{nu rho}
/// for a diagonal metric. Shared between the Killing-field generators and the
/// spin representation, so both checks use the same structure constants.
template <class T>
T lorentz_bracket_rhs(const std::function<T(int, int)>& g,
                      const std::vector<Rational>& eta_diag, int mu, int nu,
                      int rho, int sigma, const T& zero) {
  T r = zero;
  if (nu == rho) r = r + eta_diag[nu] * g(mu, sigma);
  if (mu == rho) r = r - eta_diag[mu] * g(nu, sigma);
  if (nu == sigma) r = r - eta_diag[nu] * g(mu, rho);
  if (mu == sigma) r = r + eta_diag[mu] * g(nu, rho);
  return r;
}

}  // namespace superkit
