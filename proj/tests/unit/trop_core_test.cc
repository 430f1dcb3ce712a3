#include "tropsd/trop_core.hpp"

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "test_helpers.hpp"
#include "tropsd/errors.hpp"
#include "tropsd/psd_cone.hpp"

namespace tropsd {
namespace {

using testing::R;

TEST(TropMatMulTest, Examples) {
  const Matrix z{{0, 0}, {0, 0}};
  EXPECT_EQ(trop_mat_mul(z, z), z);

  const Vector u{R(0), R(1)};
  EXPECT_EQ(trop_mat_mul(Matrix::column(u), Matrix::row(u)), (Matrix{{0, 1}, {1, 2}}));

  // Entry (i,k) = min(A[i,0] + B[0,k], A[i,1] + B[1,k]):
  // (0,0): min(0+0, 2+1) = 0   (0,1): min(0+3, 2+0) = 2
  // (1,0): min(1+0, 0+1) = 1   (1,1): min(1+3, 0+0) = 0
  const Matrix a{{0, 2}, {1, 0}};
  const Matrix b{{0, 3}, {1, 0}};
  EXPECT_EQ(trop_mat_mul(a, b), (Matrix{{0, 2}, {1, 0}}));
}

TEST(TropMatMulTest, DimensionMismatch) {
  EXPECT_THROW(trop_mat_mul(Matrix(2, 3), Matrix(2, 3)), InvalidInput);
}

TEST(TropMatMulTest, Associative) {
  cli::InstanceSampler sampler(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + sampler.uniform_index(5), q = 1 + sampler.uniform_index(5),
                      r = 1 + sampler.uniform_index(5), s = 1 + sampler.uniform_index(5);
    const Matrix a = sampler.matrix(p, q), b = sampler.matrix(q, r), c = sampler.matrix(r, s);
    EXPECT_EQ(trop_mat_mul(trop_mat_mul(a, b), c), trop_mat_mul(a, trop_mat_mul(b, c)));
  }
}

TEST(TropDetBruteForceTest, Examples) {
  const auto d1 = trop_det_bruteforce(SymMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(d1.value, R(0));
  ASSERT_EQ(d1.argmins.size(), 1u);
  EXPECT_TRUE(d1.argmins[0].is_identity());

  const auto d2 = trop_det_bruteforce(SymMatrix{{0, 0}, {0, 0}});
  EXPECT_EQ(d2.value, R(0));
  ASSERT_EQ(d2.argmins.size(), 2u);
  EXPECT_TRUE(d2.argmins[0].is_identity());
  EXPECT_EQ(d2.argmins[1], Permutation({1, 0}));

  // Six permutations: identity sums to 0, every other one uses at least two
  // off-diagonal 1s.
  const auto d3 = trop_det_bruteforce(testing::ones_off_diagonal(3));
  EXPECT_EQ(d3.value, R(0));
  ASSERT_EQ(d3.argmins.size(), 1u);
  EXPECT_TRUE(d3.argmins[0].is_identity());
}

TEST(TropDetBruteForceTest, CapacityGuard) {
  EXPECT_THROW(trop_det_bruteforce(Matrix(10, 10)), CapacityError);
  EXPECT_THROW(trop_det_bruteforce(Matrix(2, 3)), InvalidInput);
  EXPECT_NO_THROW(trop_det_bruteforce(Matrix(9, 9)));
}

TEST(TropDetBruteForceTest, MatchesLeibnizOracle) {
  cli::InstanceSampler sampler(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix a = sampler.matrix(n, n);
      const auto got = trop_det_bruteforce(a);
      const auto want = oracle::trop_det_leibniz(a);
      EXPECT_EQ(got.value, want.value);
      ASSERT_EQ(got.argmins.size(), want.argmins.size());
      for (std::size_t k = 0; k < got.argmins.size(); ++k) EXPECT_EQ(got.argmins[k].images(), want.argmins[k]);
    }
  }
}

TEST(TropDetAssignmentTest, Examples) {
  EXPECT_EQ(trop_det_assignment(testing::ones_off_diagonal(4)), R(0));
  EXPECT_EQ(trop_det_assignment(SymMatrix{{0, 1}, {1, 0}}), R(0));
  EXPECT_EQ(trop_det_assignment(Matrix{{5}}), R(5));
  EXPECT_EQ(trop_det_assignment(Matrix{{0, -1}, {-1, 0}}), R(-2));
}

TEST(TropDetAssignmentTest, Random7x7MatchesEnumeration) {
  cli::InstanceSampler sampler(77);
  const Matrix a = sampler.matrix(7, 7);
  EXPECT_EQ(trop_det_assignment(a), oracle::trop_det_leibniz(a).value);
}

TEST(TropDetAssignmentTest, AgreesWithBruteForceUpTo8) {
  cli::InstanceSampler sampler(2024);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < (n <= 6 ? 60 : 8); ++trial) {
      const Matrix a = sampler.matrix(n, n);
      EXPECT_EQ(trop_det_assignment(a), trop_det_bruteforce(a).value) << "n=" << n;
    }
  }
}

TEST(TropDetAssignmentTest, LargeDiagonalDominant) {
  // n = 30 is out of reach of enumeration; the identity is optimal because
  // every off-diagonal entry exceeds the diagonal ones.
  SymMatrix a(30, R(7));
  for (std::size_t i = 0; i < 30; ++i) a(i, i) = R(static_cast<std::int64_t>(i) - 10, 3);
  Rat diag(0);
  for (std::size_t i = 0; i < 30; ++i) diag += a(i, i);
  EXPECT_EQ(trop_det_assignment(a), diag);
}

TEST(TropDetTest, LinealityShiftAddsTwiceTheConstant) {
  cli::InstanceSampler sampler(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + sampler.uniform_index(5);
    const SymMatrix a = sampler.any(n);
    const std::size_t i = sampler.uniform_index(n);
    const Rat c = sampler.pick(std::vector<Rat>{R(-3, 2), R(-1), R(1, 3), R(2)});
    const SymMatrix shifted = a + c * lineality_generator(n, i);
    const auto before = trop_det_bruteforce(a);
    const auto after = trop_det_bruteforce(shifted);
    EXPECT_EQ(after.value, before.value + R(2) * c);
    EXPECT_EQ(after.argmins, before.argmins);
    EXPECT_EQ(trop_det_assignment(shifted), trop_det_assignment(a) + R(2) * c);
  }
}

TEST(QuadraticFormTest, Examples) {
  EXPECT_EQ(evaluate_quadratic_form(testing::zero(2), Vector{R(0), R(0)}), R(0));
  EXPECT_EQ(evaluate_quadratic_form(testing::zero(2), Vector{R(1), R(3)}), R(2));
  // Pairs: (1,1) 0+0+0, (1,2) 1+0-5, (2,2) 0-5-5 -> -10.
  EXPECT_EQ(evaluate_quadratic_form(SymMatrix{{0, 1}, {1, 0}}, Vector{R(0), R(-5)}), R(-10));
  EXPECT_THROW(evaluate_quadratic_form(testing::zero(2), Vector{R(0)}), InvalidInput);
}

TEST(QuadraticFormTest, EqualsMatrixProduct) {
  cli::InstanceSampler sampler(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + sampler.uniform_index(5);
    const SymMatrix a = sampler.any(n);
    Vector y;
    for (std::size_t i = 0; i < n; ++i) y.push_back(sampler.pick(std::vector<Rat>{R(-1), R(0), R(1, 2), R(3)}));
    const Matrix value = trop_mat_mul(trop_mat_mul(Matrix::row(y), a.to_matrix()), Matrix::column(y));
    EXPECT_EQ(evaluate_quadratic_form(a, y), value(0, 0));
  }
}

TEST(RankOneTest, Predicate) {
  EXPECT_TRUE(is_rank_one_symmetric(testing::zero(3)));
  EXPECT_TRUE(is_rank_one_symmetric(SymMatrix{{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_rank_one_symmetric(SymMatrix{{0, 1}, {1, 0}}));
}

TEST(RankOneTest, FromVector) {
  EXPECT_EQ(rank_one_from_vector(Vector{R(0), R(0), R(0)}), testing::zero(3));
  EXPECT_EQ(rank_one_from_vector(Vector{R(0), R(1)}), (SymMatrix{{0, 1}, {1, 2}}));
  const SymMatrix expected{{R(1), R(0), R(7, 2)}, {R(0), R(-1), R(5, 2)}, {R(7, 2), R(5, 2), R(6)}};
  EXPECT_EQ(rank_one_from_vector(Vector{R(1, 2), R(-1, 2), R(3)}), expected);
}

TEST(RankOneTest, RoundTrip) {
  cli::InstanceSampler sampler(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + sampler.uniform_index(6);
    Vector u;
    for (std::size_t i = 0; i < n; ++i) u.push_back(sampler.pick(std::vector<Rat>{R(-2), R(-1, 3), R(0), R(5, 2)}));
    const SymMatrix a = rank_one_from_vector(u);
    EXPECT_TRUE(is_rank_one_symmetric(a));
    Vector halves;
    for (std::size_t i = 0; i < n; ++i) halves.push_back(a(i, i).half());
    EXPECT_EQ(rank_one_from_vector(halves), a);
  }
}

}  // namespace
}  // namespace tropsd
