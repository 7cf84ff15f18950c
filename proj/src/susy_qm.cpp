#include "superkit/susy_qm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace superkit {

LadderOperators build_operators(int nb) {
  if (nb < 2)
    fail(ErrorCode::InvalidParameter, "boson cutoff must be at least 2");
  LadderOperators ops;
  ops.nb = nb;
  int dim = 2 * nb;
  ops.a = Eigen::MatrixXd::Zero(dim, dim);
  ops.c = Eigen::MatrixXd::Zero(dim, dim);
  for (int nf = 0; nf < 2; ++nf)
    for (int n = 1; n < nb; ++n)
      ops.a(ops.index(n - 1, nf), ops.index(n, nf)) = std::sqrt(double(n));
  for (int n = 0; n < nb; ++n) ops.c(ops.index(n, 0), ops.index(n, 1)) = 1.0;
  ops.adag = ops.a.transpose();
  ops.cdag = ops.c.transpose();
  ops.h = ops.adag * ops.a + ops.cdag * ops.c;
  ops.q = ops.cdag * ops.a + ops.adag * ops.c;
  return ops;
}

CheckList verify_susy_qm(const LadderOperators& ops, double tol,
                         std::uint64_t seed) {
  CheckList list;
  const int nb = ops.nb;
  const int dim = ops.dim();

  auto col_ok = [&](const Eigen::MatrixXd& m, bool safe_only) {
    double worst = 0;
    for (int j = 0; j < dim; ++j) {
      if (safe_only && !ops.safe(j)) continue;
      worst = std::max(worst, m.col(j).lpNorm<Eigen::Infinity>());
    }
    return worst;
  };

  // sector structure: c, cdag act on the fermion label only
  list.add("ladder.c-annihilates-occupied",
           (ops.cdag * ops.cdag).isZero(0.0) && (ops.c * ops.c).isZero(0.0));
  Eigen::MatrixXd ccdag = ops.c * ops.cdag + ops.cdag * ops.c;
  list.add("ladder.fermion-anticommutator",
           ccdag.isApprox(Eigen::MatrixXd::Identity(dim, dim), 0.0),
           "{c, cdag} = 1 exactly");
  list.add("ladder.sectors-commute",
           (ops.a * ops.c - ops.c * ops.a).isZero(0.0), "[a, c] = 0 exactly");
  {
    Eigen::MatrixXd comm = ops.a * ops.adag - ops.adag * ops.a -
                           Eigen::MatrixXd::Identity(dim, dim);
    double worst = col_ok(comm, true);
    list.add("ladder.boson-commutator-safe", worst <= tol,
             "[a, adag] = 1 away from the cutoff, err " + std::to_string(worst));
  }

  list.add("susy.q-symmetric", ops.q == ops.q.transpose(), "Q = Q^t exactly");
  {
    Eigen::MatrixXd diff = ops.q * ops.q - ops.h;
    double worst = col_ok(diff, true);
    list.add("susy.q-squared-is-h", worst <= tol,
             "Q^2 = H on the safe subspace, err " + std::to_string(worst));
  }
  {
    Eigen::MatrixXd comm = ops.q * ops.h - ops.h * ops.q;
    double worst = col_ok(comm, true);
    list.add("susy.q-commutes-with-h", worst <= tol,
             "[Q, H] = 0 on the safe subspace, err " + std::to_string(worst));
  }
  // Q exchanges the boson and fermion sectors: diagonal blocks vanish
  list.add("susy.q-block-off-diagonal",
           ops.q.topLeftCorner(nb, nb).isZero(0.0) &&
               ops.q.bottomRightCorner(nb, nb).isZero(0.0));

  // vacuum: H|0,0> = 0 and Q|0,0> = 0
  Eigen::VectorXd vac = Eigen::VectorXd::Zero(dim);
  vac(ops.index(0, 0)) = 1.0;
  list.add("susy.vacuum-annihilated",
           (ops.h * vac).isZero(0.0) && (ops.q * vac).isZero(0.0));

  // Q adag |0,0> = |0,1>
  Eigen::VectorXd one_boson = ops.adag * vac;
  Eigen::VectorXd mapped = ops.q * one_boson;
  Eigen::VectorXd expect = Eigen::VectorXd::Zero(dim);
  expect(ops.index(0, 1)) = 1.0;
  list.add("susy.q-maps-boson-to-fermion",
           (mapped - expect).lpNorm<Eigen::Infinity>() <= tol);

  // spectrum on the safe subspace via an eigensolve: 0, 1, 1, ..., with the
  // truncation-boundary level nb-1 appearing once
  {
    std::vector<int> safe_idx;
    for (int j = 0; j < dim; ++j)
      if (ops.safe(j)) safe_idx.push_back(j);
    int n = static_cast<int>(safe_idx.size());
    Eigen::MatrixXd hs(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) hs(i, j) = ops.h(safe_idx[i], safe_idx[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hs);
    Eigen::VectorXd ev = solver.eigenvalues();
    std::vector<double> expect_ev;
    expect_ev.push_back(0.0);
    for (int e = 1; e <= nb - 2; ++e) {
      expect_ev.push_back(e);
      expect_ev.push_back(e);
    }
    expect_ev.push_back(nb - 1.0);
    std::sort(expect_ev.begin(), expect_ev.end());
    bool ok = static_cast<int>(expect_ev.size()) == n;
    double worst = 0;
    for (int i = 0; ok && i < n; ++i)
      worst = std::max(worst, std::fabs(ev(i) - expect_ev[i]));
    ok = ok && worst <= tol;
    list.add("spectrum.values", ok,
             "eigenvalues are {0,1,1,2,2,...}, err " + std::to_string(worst));

    // non-negativity and a simple zero mode
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
      if (ev(i) < -tol) ok = false;
      if (std::fabs(ev(i)) <= tol) ++zeros;
    }
    list.add("spectrum.nonnegative-simple-zero", ok && zeros == 1,
             "spectrum is nonnegative with a simple zero mode");
  }

  // boson/fermion pairing: every level 1 <= E <= nb-2 holds exactly one
  // state per sector (H is diagonal in the occupation basis)
  {
    bool ok = true;
    for (int e = 1; e <= nb - 2; ++e) {
      int bosonic = 0, fermionic = 0;
      for (int n = 0; n <= nb - 2; ++n) {
        if (n == e) ++bosonic;            // (n_b = e, n_f = 0)
        if (n + 1 == e) ++fermionic;      // (n_b = e-1, n_f = 1)
      }
      ok = ok && bosonic == 1 && fermionic == 1;
      ok = ok && std::fabs(ops.h(ops.index(e, 0), ops.index(e, 0)) - e) <= tol;
      if (e >= 1)
        ok = ok &&
             std::fabs(ops.h(ops.index(e - 1, 1), ops.index(e - 1, 1)) - e) <=
                 tol;
    }
    list.add("spectrum.sector-pairing", ok,
             "each safe positive level pairs one bosonic and one fermionic state");
  }

  // <psi|Q^2|psi> = ||Q psi||^2 >= 0 on random safe-supported states
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool ok = true;
    for (int it = 0; it < 32; ++it) {
      Eigen::VectorXd psi = Eigen::VectorXd::Zero(dim);
      for (int j = 0; j < dim; ++j)
        if (ops.safe(j)) psi(j) = dist(rng);
      double lhs = psi.dot(ops.q * (ops.q * psi));
      double rhs = (ops.q * psi).squaredNorm();
      ok = ok && std::fabs(lhs - rhs) <= tol * std::max(1.0, rhs) &&
           lhs >= -tol;
    }
    list.add("susy.energy-nonnegative", ok,
             "<psi|Q^2|psi> = ||Q psi||^2 >= 0 on random states");
  }

  return list;
}

}  // namespace superkit
