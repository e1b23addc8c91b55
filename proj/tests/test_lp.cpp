#include <gtest/gtest.h>

#include <random>

#include "compmat/errors.hpp"
#include "compmat/lp.hpp"
#include "oracles.hpp"

using namespace compmat;

TEST(Lp, StrictHomogeneousSystem) {
  LinearSystem s(2);
  s.add_bound(0, Relation::Gt);
  s.add_bound(1, Relation::Gt);
  s.add(Vector{-1, 3}, Relation::Eq);
  s.add(Vector{2, -6}, Relation::Eq);
  const auto r = lp_feasible(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(s.satisfied_by(r.witness));
  EXPECT_EQ(r.witness[0], 3 * r.witness[1]);
}

TEST(Lp, InfeasibleStrictSystem) {
  // x > 0, y > 0, x + y = 0.
  LinearSystem s(2);
  s.add_bound(0, Relation::Gt);
  s.add_bound(1, Relation::Gt);
  s.add(Vector{1, 1}, Relation::Eq);
  EXPECT_FALSE(lp_feasible(s).feasible);
}

TEST(Lp, FreeVariablesAndNegativeRhs) {
  LinearSystem s(2);
  s.add(Vector{1, 1}, Relation::Eq, -3);
  s.add(Vector{1, -1}, Relation::Le, -5);
  const auto r = lp_feasible(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(s.satisfied_by(r.witness));
}

TEST(Lp, InfeasibleNonStrict) {
  LinearSystem s(1);
  s.add_bound(0, Relation::Ge);
  s.add(Vector{1}, Relation::Le, -1);
  EXPECT_FALSE(lp_feasible(s).feasible);
}

TEST(Lp, StrictWithRhsRejected) {
  LinearSystem s(1);
  s.add(Vector{1}, Relation::Gt, 2);
  EXPECT_THROW(lp_feasible(s), UnsupportedSystem);
}

TEST(Lp, DegenerateCyclingProne) {
  // Beale's example constraints as a feasibility problem with zero rhs rows.
  LinearSystem s(4);
  for (std::size_t i = 0; i < 4; ++i) s.add_bound(i, Relation::Ge);
  s.add(Vector{Rational(1, 4), -8, -1, 9}, Relation::Le, 0);
  s.add(Vector{Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::Le, 0);
  s.add(Vector{0, 0, 1, 0}, Relation::Le, 1);
  s.add(Vector{1, 1, 1, 1}, Relation::Ge, 1);
  const auto r = lp_feasible(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(s.satisfied_by(r.witness));
}

// Feasibility agrees with a vertex oracle on bounded boxes: every system
// below is {Mx ≤ b, 0 ≤ x ≤ 2}, whose feasibility is decided by trying every
// point of the grid {0, 1/2, ..., 2}^2 plus every vertex obtained from a pair of
// active constraints.
TEST(Lp, AgreesWithVertexOracle) {
  std::mt19937_64 rng(5);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LinearSystem s(2);
    std::vector<std::pair<Vector, Rational>> rows;
    for (std::size_t i = 0; i < 2; ++i) {
      s.add_bound(i, Relation::Ge);
      s.add_bound(i, Relation::Le, 2);
      Vector e = zero_vector(2);
      e[i] = 1;
      rows.push_back({e, 2});
      rows.push_back({Rational(-1) * e, 0});
    }
    for (int k = 0; k < 3; ++k) {
      const Vector c = oracle::random_vector(rng, 2, 3);
      const Rational b = oracle::random_vector(rng, 1, 3)[0];
      s.add(c, Relation::Le, b);
      rows.push_back({c, b});
    }
    bool oracle_feasible = false;
    for (std::size_t i = 0; i < rows.size() && !oracle_feasible; ++i) {
      for (std::size_t j = i + 1; j < rows.size() && !oracle_feasible; ++j) {
        const Matrix m{{rows[i].first[0], rows[i].first[1]}, {rows[j].first[0], rows[j].first[1]}};
        if (oracle::det(m).is_zero()) continue;
        oracle_feasible = s.satisfied_by(oracle::cramer(m, Vector{rows[i].second, rows[j].second}));
      }
    }
    const auto r = lp_feasible(s);
    ASSERT_EQ(r.feasible, oracle_feasible) << "trial " << trial;
    if (r.feasible) {
      ASSERT_TRUE(s.satisfied_by(r.witness));
      ++feasible;
    }
  }
  EXPECT_GT(feasible, 20);
  EXPECT_LT(feasible, 200);
}
