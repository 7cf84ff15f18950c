#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superkit/susy_qm.hpp"

using namespace superkit;

TEST_CASE("operator construction") {
  LadderOperators ops = build_operators(12);
  CHECK(ops.dim() == 24);

  // cdag|n,0> = |n,1>, cdag|n,1> = 0
  Eigen::VectorXd e00 = Eigen::VectorXd::Zero(ops.dim());
  e00(ops.index(3, 0)) = 1.0;
  Eigen::VectorXd up = ops.cdag * e00;
  CHECK(up(ops.index(3, 1)) == 1.0);
  CHECK((ops.cdag * up).isZero(0.0));

  // (c cdag + cdag c) = 1 on both fermion states
  Eigen::MatrixXd anti = ops.c * ops.cdag + ops.cdag * ops.c;
  CHECK(anti.isApprox(Eigen::MatrixXd::Identity(ops.dim(), ops.dim()), 0.0));

  CHECK_THROWS_AS(build_operators(1), Error);
}

TEST_CASE("full verification battery at N_b = 12") {
  CheckList list = verify_susy_qm(12, 1e-10);
  for (const auto& item : list.items) {
    INFO(item.id, ": ", item.detail);
    CHECK(item.ok);
  }
}

TEST_CASE("verification holds for other cutoffs") {
  CHECK(verify_susy_qm(2, 1e-10).ok());
  CHECK(verify_susy_qm(7, 1e-10).ok());
  CHECK(verify_susy_qm(20, 1e-10).ok());
}

TEST_CASE("negative control: a perturbed generator fails") {
  LadderOperators ops = build_operators(12);
  ops.q(0, 0) += 0.5;  // breaks the off-diagonal block structure and Q^2 = H
  CheckList list = verify_susy_qm(ops, 1e-10);
  CHECK_FALSE(list.ok());
}
