#include <gtest/gtest.h>

#include <random>

#include "compmat/errors.hpp"
#include "compmat/linalg.hpp"
#include "oracles.hpp"

using namespace compmat;

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix{{1, 0}, {1, 0}}), 1u);
  EXPECT_EQ(rank(Matrix{{2, -1}, {-4, 2}}), 1u);
  EXPECT_EQ(rank(Matrix{{1, 4, 3}, {2, 1, 5}, {3, 2, 0}}), 3u);
  EXPECT_EQ(rank(Matrix(2, 3)), 0u);
}

TEST(NullSpace, KnownKernels) {
  const auto k1 = null_space_basis(Matrix{{3, -2, 0}, {-2, 1, 1}, {-3, 2, 0}});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0], (Vector{2, 3, 1}));

  const auto k2 = null_space_basis(Matrix{{2, -1}, {-4, 2}});
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (Vector{1, 2}));

  const auto k3 = null_space_basis(Matrix{{-1, 3}, {2, -6}});
  ASSERT_EQ(k3.size(), 1u);
  EXPECT_EQ(k3[0], (Vector{3, 1}));

  EXPECT_TRUE(null_space_basis(Matrix{{1, 4, 3}, {2, 1, 5}, {3, 2, 0}}).empty());
}

TEST(Det, Examples) {
  EXPECT_EQ(det(Matrix(0, 0)), Rational(1));
  EXPECT_EQ(det(Matrix{{2, 1}, {1, -1}}), Rational(-3));
  EXPECT_EQ(det(Matrix{{2, -1}, {-4, 2}}), Rational(0));
  EXPECT_EQ(det(Matrix{{0, 1}, {1, 0}}), Rational(-1));
}

TEST(SolveLinear, ConsistentAndInconsistent) {
  const Matrix m{{1, 2}, {2, 4}};
  const auto ok = solve_linear(m, Vector{3, 6});
  ASSERT_TRUE(ok.consistent);
  EXPECT_EQ(m * ok.particular, (Vector{3, 6}));
  ASSERT_EQ(ok.null_basis.size(), 1u);
  EXPECT_TRUE(is_zero(m * ok.null_basis[0]));

  const auto bad = solve_linear(m, Vector{3, 7});
  ASSERT_FALSE(bad.consistent);
  EXPECT_TRUE(is_zero(m.transpose() * bad.certificate));
  EXPECT_FALSE(dot(bad.certificate, Vector{3, 7}).is_zero());

  EXPECT_THROW(solve_linear(m, Vector{1}), DimensionMismatch);
}

TEST(Inverse, SingularThrows) {
  EXPECT_THROW(inverse(Matrix{{2, -1}, {-4, 2}}), SingularPivot);
  const Matrix m{{2, 1}, {1, -1}};
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
}

TEST(Ppt, EmptyPivotIsIdentityMap) {
  const Matrix a{{3, -2, 0}, {-2, 1, 1}, {-3, 2, 0}};
  const auto r = ppt(a, IndexSet::empty(3));
  EXPECT_EQ(r.transformed, a);
  EXPECT_EQ(r.pivot_det_sign, 1);
}

TEST(Ppt, FullPivotIsInverse) {
  const Matrix a{{2, 1}, {1, -1}};
  EXPECT_EQ(ppt(a, IndexSet::full(2)).transformed, inverse(a));
  EXPECT_EQ(ppt(a, IndexSet::full(2)).pivot_det_sign, -1);
}

TEST(Ppt, ExchangesWAndZ) {
  // w = Az  ⇔  (z_α, w_ᾱ) = A' (w_α, z_ᾱ), checked on an explicit point.
  const Matrix a{{2, 1, 0}, {1, 3, -1}, {4, 0, 5}};
  const IndexSet alpha(3, {0, 2});
  const Matrix p = ppt(a, alpha).transformed;
  const Vector z{1, -2, 3};
  const Vector w = a * z;
  const Vector in{w[0], z[1], w[2]};
  const Vector out{z[0], w[1], z[2]};
  EXPECT_EQ(p * in, out);
}

TEST(Ppt, SingularPivotThrows) {
  EXPECT_THROW(ppt(Matrix{{2, -1}, {-4, 2}}, IndexSet::full(2)), SingularPivot);
  EXPECT_THROW(schur_complement(Matrix{{0, 1}, {1, 0}}, IndexSet(2, {0})), SingularPivot);
}

TEST(PrincipalMinorSigns, IndexedByMask) {
  const auto s = principal_minor_signs(Matrix{{2, 1}, {1, -1}});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 1);
  EXPECT_EQ(s[2], -1);
  EXPECT_EQ(s[3], -1);
}

TEST(LinalgProperties, AgreeWithCofactorOracles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix a = oracle::random_matrix(rng, n, trial % 3 == 0 ? 1 : 5);
    ASSERT_EQ(det(a), oracle::det(a)) << a.str();
    ASSERT_EQ(rank(a), oracle::rank(a)) << a.str();

    const auto kernel = null_space_basis(a);
    ASSERT_EQ(rank(a) + kernel.size(), n);
    for (const auto& v : kernel) ASSERT_TRUE(is_zero(a * v)) << a.str();

    const auto signs = principal_minor_signs(a);
    for (std::uint64_t m = 0; m < signs.size(); ++m) {
      ASSERT_EQ(signs[m], oracle::principal_minor(a, m).sign());
    }

    const Vector b = oracle::random_vector(rng, n);
    const auto sol = solve_linear(a, b);
    if (sol.consistent) {
      ASSERT_EQ(a * sol.particular, b);
    } else {
      ASSERT_TRUE(is_zero(a.transpose() * sol.certificate));
      ASSERT_FALSE(dot(sol.certificate, b).is_zero());
    }
  }
}

TEST(LinalgProperties, PptInvolutionAndSchur) {
  std::mt19937_64 rng(12);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Matrix a = oracle::random_matrix(rng, n);
    const IndexSet alpha = IndexSet::from_mask(n, 1 + rng() % ((1u << n) - 1));
    if (oracle::det(a.principal(alpha)).is_zero()) continue;
    ++tested;
    const auto p = ppt(a, alpha);
    ASSERT_EQ(ppt(p.transformed, alpha).transformed, a) << a.str();
    const IndexSet rest = alpha.complement();
    const Matrix s = schur_complement(a, alpha);
    ASSERT_EQ(p.transformed.block(rest, rest), s);
    ASSERT_EQ(oracle::det(a), oracle::det(a.principal(alpha)) * oracle::det(s));
    // The αα block of A' is A_αα⁻¹.
    ASSERT_EQ(p.transformed.principal(alpha) * a.principal(alpha), Matrix::identity(alpha.size()));
  }
  EXPECT_GT(tested, 150);
}

TEST(EnumerationCap, Enforced) {
  EXPECT_THROW(check_enumeration_cap(enumeration_cap() + 1), CapExceeded);
  EXPECT_NO_THROW(check_enumeration_cap(enumeration_cap()));
}
