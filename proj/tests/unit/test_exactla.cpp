#include "oracle.hpp"
#include "support.hpp"

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace trilie {
namespace {

using testing::Rng;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse(" -10/5 ").str(), "-2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-2, 3) * Rational(3, 4), Rational(-1, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1//2", "1.5", "2/", "/3", "1/2/3", "3/-6"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, HandlesNumeratorsBeyondMachineWords) {
  const Rational big = Rational::parse("123456789012345678901234567890/3");
  EXPECT_EQ(big.str(), "41152263004115226300411522630");
  EXPECT_EQ((big * Rational(3) - Rational::parse("123456789012345678901234567890")).is_zero(), true);
}

TEST(Matrix, ArithmeticAndTranspose) {
  const Mat a{{1, 2}, {3, 4}};
  const Mat b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Mat{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (Mat{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * (Vec{1, 1}), (Vec{3, 7}));
  std::ostringstream os;
  os << Vec{Rational(1, 2), 3};
  EXPECT_EQ(os.str(), "(1/2, 3)");
}

TEST(Linalg, RankMatchesBareissOracle) {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
    Mat m = rng.sparse_mat(r, c);
    if (r > 1 && rng.coin()) m.set_row(r - 1, m.row(0) * rng.fraction());  // force dependence
    EXPECT_EQ(rank(m), oracle::bareiss_rank(m));
  }
}

TEST(Linalg, KernelBasisIsAKernelOfTheRightSize) {
  Rng rng(12);
  for (int it = 0; it < 60; ++it) {
    const Mat m = rng.sparse_mat(static_cast<std::size_t>(rng.uniform(1, 5)), static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto basis = kernel_basis(m);
    EXPECT_EQ(basis.size(), m.cols() - oracle::bareiss_rank(m));
    for (const auto& v : basis) EXPECT_TRUE((m * v).is_zero());
    EXPECT_EQ(span_rank(basis), basis.size());
  }
}

TEST(Linalg, InverseAndSolve) {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    const Mat m = rng.invertible(4);
    EXPECT_EQ(m * inverse(m), Mat::identity(4));
    const Vec b = rng.vec(4);
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
  const Mat singular{{1, 2}, {2, 4}};
  EXPECT_FALSE(try_inverse(singular).has_value());
  EXPECT_THROW(inverse(singular), NotInvertible);
  EXPECT_FALSE(solve(singular, Vec{1, 0}).has_value());
}

TEST(Linalg, RowSpaceReducesCanonically) {
  RowSpace s(3);
  EXPECT_TRUE(s.add(Vec{1, 1, 0}));
  EXPECT_TRUE(s.add(Vec{0, 1, 1}));
  EXPECT_FALSE(s.add(Vec{1, 2, 1}));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(Vec{2, 0, -2}));
  // Representatives of the same coset agree.
  EXPECT_EQ(s.reduce(Vec{0, 0, 1}), s.reduce(Vec{1, 1, 1}));
}

TEST(Linalg, QuotientDimensionDetectsEscapingCoboundaries) {
  const std::vector<Vec> z{Vec{1, 0, 0}, Vec{0, 1, 0}};
  const std::vector<Vec> b{Vec{1, 1, 0}};
  EXPECT_EQ(quotient_dim(z, b), 1u);
  const std::vector<Vec> outside{Vec{0, 0, 1}};
  EXPECT_THROW((void)quotient_dim(z, outside), ContainmentViolation);
}

TEST(Alternating, SignsAndRepeatedIndices) {
  Alternating<Vec> t(4, 3, Vec(2));
  t.set({2, 0, 1}, Vec{1, 0});  // even permutation of (0,1,2)
  EXPECT_EQ(t.at({0, 1, 2}), (Vec{1, 0}));
  EXPECT_EQ(t.at({1, 0, 2}), (Vec{-1, 0}));
  EXPECT_TRUE(t.at({0, 0, 2}).is_zero());
  EXPECT_THROW(t.set({1, 1, 2}, Vec{1, 1}), std::invalid_argument);
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(combinations(4, 2).size(), 6u);
}

}  // namespace
}  // namespace trilie
