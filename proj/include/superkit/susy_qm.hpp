#pragma once

#include <Eigen/Dense>

#include "superkit/checks.hpp"
#include "superkit/error.hpp"

namespace superkit {

/// Truncated N=1 supersymmetric oscillator: boson levels 0..nb-1 tensored
/// with a two-state fermion, in the sector-ordered basis
/// index(n_b, n_f) = n_f * nb + n_b. The boson truncation breaks [a, adag] = 1
/// on the top level, so algebra checks run on the safe subspace n_b <= nb-2.
struct LadderOperators {
  int nb = 0;
  Eigen::MatrixXd a, adag, c, cdag, h, q;

  int dim() const { return 2 * nb; }
  int index(int n_b, int n_f) const { return n_f * nb + n_b; }
  bool safe(int idx) const { return idx % nb <= nb - 2; }
};

/// H = adag a + cdag c and Q = cdag a + adag c on a boson cutoff of nb levels.
LadderOperators build_operators(int nb);

/// The full verification battery at the given tolerance: ladder relations,
/// Q = Q^t, Q^2 = H and [Q, H] = 0 on the safe subspace, spectrum
/// {0, 1, 1, 2, 2, ...} with a simple Q-annihilated ground state and
/// boson/fermion pairing of the safe positive levels.
CheckList verify_susy_qm(const LadderOperators& ops, double tol = 1e-10,
                         std::uint64_t seed = 12345);

inline CheckList verify_susy_qm(int nb, double tol = 1e-10) {
  return verify_susy_qm(build_operators(nb), tol);
}

}  // namespace superkit
