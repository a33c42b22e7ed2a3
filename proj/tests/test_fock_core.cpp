// Copyright 2026 The fockchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockchan/fock_core.hpp"

#include "gtest/gtest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace fockchan;
using fockchan::testing::exact_binomial;

TEST(log_binomial, small_values) {
  EXPECT_EQ(log_binomial(0, 0), 0.0);
  EXPECT_NEAR(log_binomial(5, 2), std::log(10.0), 1e-15);
  EXPECT_EQ(log_binomial(7, 0), 0.0);
  EXPECT_NEAR(log_binomial(7, 7), 0.0, 1e-15);
}

TEST(log_binomial, matches_exact_integer_binomials) {
  // C(60, 30) = 118264581564861424
  ASSERT_TRUE(exact_binomial(60, 30) == static_cast<unsigned __int128>(118264581564861424ULL));
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) {
      const double exact = static_cast<double>(exact_binomial(n, k));
      const double got = std::exp(log_binomial(n, k));
      EXPECT_LE(std::abs(got - exact) / exact, 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(log_binomial, pascal_rule) {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k < n; ++k) {
      const double lhs = std::exp(log_binomial(n, k));
      const double rhs = std::exp(log_binomial(n - 1, k - 1)) + std::exp(log_binomial(n - 1, k));
      EXPECT_LE(std::abs(lhs - rhs) / lhs, 1e-10);
    }
  }
}

TEST(log_binomial, domain_errors) {
  EXPECT_THROW(log_binomial(3, 4), DomainError);
  EXPECT_THROW(log_binomial(-1, 0), DomainError);
  EXPECT_THROW(log_binomial(3, -1), DomainError);
}

TEST(tensor_dyad, vacuum_product) {
  const auto rho = tensor_dyad(FockOperator::dyad(0, 0, 3), FockOperator::dyad(0, 0, 3));
  EXPECT_EQ(rho.entries()(0, 0), 1.0);
  EXPECT_EQ(rho.entries().cwiseAbs().sum(), 1.0);
}

TEST(tensor_dyad, single_entry_placement) {
  const auto op = tensor_dyad(FockOperator::dyad(1, 0, 2), FockOperator::dyad(0, 1, 2));
  EXPECT_EQ(op.element(1, 0, 0, 1), 1.0);
  EXPECT_EQ(op.entries()(op.index(1, 0), op.index(0, 1)), 1.0);
  EXPECT_EQ(op.entries().cwiseAbs().sum(), 1.0);
}

TEST(tensor_dyad, trace_and_entries_match_double_sum) {
  std::mt19937_64 rng(7);
  const FockOperator a(fockchan::testing::random_symmetric(5, rng));
  const FockOperator b(fockchan::testing::random_symmetric(5, rng));
  const auto ab = tensor_dyad(a, b);
  double trace = 0.0;
  for (int m = 0; m < 5; ++m)
    for (int p = 0; p < 5; ++p) trace += a(m, m) * b(p, p);
  EXPECT_NEAR(ab.trace(), trace, 1e-12);
  EXPECT_NEAR(ab.trace(), a.trace() * b.trace(), 1e-12);
  for (int m = 0; m < 5; ++m)
    for (int p = 0; p < 5; ++p)
      for (int n = 0; n < 5; ++n)
        for (int q = 0; q < 5; ++q) ASSERT_EQ(ab.element(m, p, n, q), a(m, n) * b(p, q));
}

TEST(tensor_dyad, bilinear) {
  std::mt19937_64 rng(8);
  const FockOperator a1(fockchan::testing::random_symmetric(4, rng));
  const FockOperator a2(fockchan::testing::random_symmetric(4, rng));
  const FockOperator b(fockchan::testing::random_symmetric(4, rng));
  const FockOperator sum(Eigen::MatrixXd(a1.entries() + a2.entries()));
  const Eigen::MatrixXd lhs = tensor_dyad(sum, b).entries();
  const Eigen::MatrixXd rhs = tensor_dyad(a1, b).entries() + tensor_dyad(a2, b).entries();
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(tensor_dyad, cutoff_mismatch) {
  EXPECT_THROW(tensor_dyad(FockOperator(2), FockOperator(3)), DimensionError);
}

TEST(partial_transpose, product_state_unchanged) {
  const auto rho = tensor_dyad(FockOperator::dyad(0, 0, 2), FockOperator::dyad(0, 0, 2));
  EXPECT_EQ(partial_transpose(rho).entries(), rho.entries());
}

TEST(partial_transpose, bell_type_state_has_negative_half) {
  TwoModeFockOperator rho(1);
  const auto i10 = rho.index(1, 0), i01 = rho.index(0, 1);
  rho.entries()(i10, i10) = rho.entries()(i01, i01) = rho.entries()(i10, i01) = rho.entries()(i01, i10) = 0.5;
  EXPECT_NEAR(min_eigenvalue_symmetric(partial_transpose(rho).entries()), -0.5, 1e-14);
}

TEST(partial_transpose, index_rule_involution_and_trace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const TwoModeFockOperator rho(3, fockchan::testing::random_symmetric(16, rng));
    const auto pt = partial_transpose(rho);
    for (int m = 0; m < 4; ++m)
      for (int p = 0; p < 4; ++p)
        for (int n = 0; n < 4; ++n)
          for (int q = 0; q < 4; ++q) ASSERT_EQ(pt.element(m, q, n, p), rho.element(m, p, n, q));
    EXPECT_EQ(partial_transpose(pt).entries(), rho.entries());
    EXPECT_NEAR(pt.trace(), rho.trace(), 1e-13);
  }
}

TEST(partial_transpose, linear) {
  std::mt19937_64 rng(12);
  const TwoModeFockOperator a(2, fockchan::testing::random_symmetric(9, rng));
  const TwoModeFockOperator b(2, fockchan::testing::random_symmetric(9, rng));
  const TwoModeFockOperator ab(2, Eigen::MatrixXd(2.0 * a.entries() - b.entries()));
  const Eigen::MatrixXd lhs = partial_transpose(ab).entries();
  const Eigen::MatrixXd rhs = 2.0 * partial_transpose(a).entries() - partial_transpose(b).entries();
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(min_eigenvalue_symmetric, simple_cases) {
  EXPECT_NEAR(min_eigenvalue_symmetric(Eigen::MatrixXd::Identity(4, 4)), 1.0, 1e-15);
  EXPECT_NEAR(min_eigenvalue_symmetric(Eigen::Vector3d(3.0, -2.0, 7.0).asDiagonal().toDenseMatrix()), -2.0, 1e-15);
  EXPECT_EQ(min_eigenvalue_symmetric(Eigen::MatrixXd::Zero(3, 3)), 0.0);
}

TEST(min_eigenvalue_symmetric, agrees_with_sturm_bisection) {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd m = fockchan::testing::random_symmetric(20, rng);
    const double tol = 1e-9 * std::max(1.0, m.norm());
    EXPECT_NEAR(min_eigenvalue_symmetric(m), fockchan::testing::sturm_min_eigenvalue(m), tol);
  }
}

TEST(min_eigenvalue_symmetric, full_spectrum_matches_reference) {
  std::mt19937_64 rng(21);
  const Eigen::MatrixXd m = fockchan::testing::random_symmetric(12, rng);
  Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
  EXPECT_LE((symmetric_eigenvalues(m) - ref).cwiseAbs().maxCoeff(), 1e-10 * m.norm());
}

TEST(min_eigenvalue_symmetric, rayleigh_quotient_bound) {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd m = fockchan::testing::random_symmetric(8, rng);
    const double lmin = min_eigenvalue_symmetric(m);
    for (int probe = 0; probe < 20; ++probe) {
      Eigen::VectorXd x(8);
      for (int i = 0; i < 8; ++i) x(i) = g(rng);
      EXPECT_LE(lmin, x.dot(m * x) / x.squaredNorm() + 1e-12);
    }
  }
}

TEST(min_eigenvalue_symmetric, float_scalar) {
  const Eigen::Matrix3f m = Eigen::Vector3f(2.0f, -1.5f, 4.0f).asDiagonal();
  EXPECT_FLOAT_EQ(min_eigenvalue_symmetric(m), -1.5f);
}

TEST(min_eigenvalue_symmetric, errors) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(min_eigenvalue_symmetric(m), DomainError);
  m(0, 1) = std::nan("");
  EXPECT_THROW(min_eigenvalue_symmetric(m), NumericError);
  EXPECT_THROW(min_eigenvalue_symmetric(Eigen::MatrixXd(2, 3)), DimensionError);
}

TEST(min_eigenvalue_block_symmetric, matches_dense_solver_on_permuted_blocks) {
  std::mt19937_64 rng(30);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(9, 9);
  m.block(0, 0, 4, 4) = fockchan::testing::random_symmetric(4, rng);
  m.block(4, 4, 5, 5) = fockchan::testing::random_symmetric(5, rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(9);
  perm.setIdentity();
  std::shuffle(perm.indices().data(), perm.indices().data() + 9, rng);
  const Eigen::MatrixXd shuffled = perm * m * perm.transpose();
  EXPECT_EQ(nonzero_blocks(shuffled).size(), 2u);
  EXPECT_NEAR(min_eigenvalue_block_symmetric(shuffled), min_eigenvalue_symmetric(shuffled), 1e-12);
}

TEST(check_density, accepts_states_rejects_others) {
  std::mt19937_64 rng(40);
  EXPECT_NO_THROW(check_density(FockOperator(fockchan::testing::random_density(5, rng))));
  EXPECT_THROW(check_density(FockOperator(Eigen::MatrixXd(2.0 * Eigen::MatrixXd::Identity(3, 3)))), DomainError);
  Eigen::MatrixXd neg = Eigen::MatrixXd::Zero(2, 2);
  neg(0, 0) = 1.0;
  neg(1, 1) = -0.1;
  EXPECT_THROW(check_density(FockOperator(neg)), DomainError);
}
