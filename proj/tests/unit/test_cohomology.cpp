#include "oracle.hpp"
#include "support.hpp"

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

#include <gtest/gtest.h>

namespace trilie {
namespace {

using testing::Rng;

Cochain random_cochain(const TwistedOperator& op, std::size_t degree, Rng& rng) {
  const std::size_t n = Cochain::space_dim(degree, op.space_dim(), op.algebra_dim());
  Vec coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = rng.coin() ? rng.fraction() : Rational();
  return Cochain::from_coefficients(degree, op.space_dim(), op.algebra_dim(), coeffs);
}

/// A dim V = 3 operator, so that degree 2 and 3 cochains are not all zero.
TwistedOperator three_dim_space_operator(Rng& rng) {
  for (;;) {
    TwistedOperator op = testing::random_twisted(rng);
    if (op.space_dim() >= 3) return op;
  }
}

TEST(TwistedComplex, RhoThetaIsARepresentationOfTheInducedBracket) {
  Rng rng(41);
  for (int it = 0; it < 10; ++it) {
    const TwistedOperator op = testing::random_twisted(rng);
    EXPECT_TRUE(check_rep3(induced_bracket(op), rho_theta_rep(op)).passed());
  }
}

TEST(TwistedComplex, GenericAndExpandedFormsAgree) {
  Rng rng(42);
  for (int it = 0; it < 20; ++it) {
    const TwistedOperator op = three_dim_space_operator(rng);
    for (std::size_t degree = 1; degree <= 2; ++degree) {
      const Cochain f = random_cochain(op, degree, rng);
      EXPECT_EQ(twisted_diff_generic(op, f), twisted_diff_expanded(op, f));
      EXPECT_NO_THROW((void)twisted_diff(op, f));
    }
  }
}

TEST(TwistedComplex, DifferentialSquaresToZero) {
  Rng rng(43);
  for (int it = 0; it < 15; ++it) {
    const TwistedOperator op = three_dim_space_operator(rng);
    for (std::size_t degree = 1; degree <= 2; ++degree) {
      const Cochain f = random_cochain(op, degree, rng);
      EXPECT_TRUE(twisted_diff(op, twisted_diff(op, f)).is_zero());
    }
    EXPECT_TRUE(twisted_diff(op, delta_unchecked(op, testing::random_bivector(op.algebra_dim(), rng))).is_zero());
  }
}

TEST(TwistedComplex, CeDifferentialSquaresToZero) {
  Rng rng(44);
  for (int it = 0; it < 10; ++it) {
    const testing::Context3 c = testing::random_context(rng);
    const Mat d1 = ce_diff_matrix(c.algebra, c.rep, 1);
    const Mat d2 = ce_diff_matrix(c.algebra, c.rep, 2);
    EXPECT_TRUE((d2 * d1).is_zero());
  }
}

TEST(TwistedComplex, DeltaIsClosed) {
  Rng rng(45);
  for (int it = 0; it < 10; ++it) {
    const TwistedOperator op = testing::random_twisted(rng);
    const ZeroCochain x = testing::random_bivector(op.algebra_dim(), rng);
    const Cochain d = delta_op(op, x);
    EXPECT_EQ(d.degree(), 1u);
    EXPECT_TRUE(twisted_diff(op, d).is_zero());
  }
}

TEST(TwistedComplex, DeltaMatchesItsFormulaOnBasis) {
  // delta(X)v = T(rho(X)v + theta(X,Tv)) - [X,Tv] with X = e_i ^ e_j.
  Rng rng(46);
  const TwistedOperator op = testing::random_nijenhuis_op(rng);
  const std::size_t n = op.algebra_dim(), m = op.space_dim();
  for (const auto& p : combinations(n, 2)) {
    ZeroCochain x(n);
    x.set(p[0], p[1], 1);
    const LinearMap d = delta_op(op, x).as_linear_map();
    const Vec ei = Vec::unit(n, p[0]), ej = Vec::unit(n, p[1]);
    for (std::size_t v = 0; v < m; ++v) {
      const Vec tv = op.map * Vec::unit(m, v);
      const Vec expected = op.map * (op.rep.apply(ei, ej, Vec::unit(m, v)) + op.cocycle.eval(ei, ej, tv)) -
                           op.algebra.bracket(ei, ej, tv);
      EXPECT_EQ(d.column(v), expected);
    }
  }
}

TEST(Cohomology, MatchesBruteForceOracle) {
  Rng rng(47);
  const Workspace ws = testing::load_fixtures({"nijenhuis_op.json", "a3.json", "equiv.json"});
  std::vector<TwistedOperator> ops{ws.get<TwistedOperator>("nij"), ws.get<TwistedOperator>("A3zero_op"),
                                   ws.get<TwistedOperator>("H4op")};
  for (int it = 0; it < 3; ++it) ops.push_back(testing::random_twisted(rng));
  for (const auto& op : ops) {
    const oracle::TwistedComplex ref(op);
    for (std::size_t degree = 0; degree <= 2; ++degree) {
      const CohomologyResult got = cohomology_dims(op, degree, kDefaultCochainCap, 1);
      const oracle::Dims want = ref.cohomology(degree);
      EXPECT_EQ(got.dim_cochains, want.cochains) << degree;
      EXPECT_EQ(got.dim_cocycles, want.cocycles) << degree;
      EXPECT_EQ(got.dim_coboundaries, want.coboundaries) << degree;
      EXPECT_EQ(got.dim_cohomology, want.cohomology) << degree;
    }
  }
}

TEST(Cohomology, WorkedExampleDegreeOne) {
  const Workspace ws = testing::load_fixtures({"nijenhuis_op.json"});
  const CohomologyResult r = cohomology_dims(ws.get<TwistedOperator>("nij"), 1);
  EXPECT_EQ(r.dim_cochains, 9u);
  EXPECT_EQ(r.dim_cocycles, 6u);
  EXPECT_EQ(r.dim_coboundaries, 3u);
  EXPECT_EQ(r.dim_cohomology, 3u);
}

TEST(Cohomology, RepresentativesAreClosedAndIndependentModuloBoundaries) {
  Rng rng(48);
  for (int it = 0; it < 6; ++it) {
    const TwistedOperator op = testing::random_twisted(rng);
    for (std::size_t degree = 1; degree <= 2; ++degree) {
      const CohomologyResult r = cohomology_dims(op, degree);
      ASSERT_EQ(r.representatives.size(), r.dim_cohomology);
      const Mat d = twisted_differential_matrix(op, degree);
      RowSpace span(r.dim_cochains);
      const Mat prev = twisted_differential_matrix(op, degree - 1);
      for (std::size_t c = 0; c < prev.cols(); ++c) span.add(prev.column(c));
      for (const Vec& rep : r.representatives) {
        EXPECT_TRUE((d * rep).is_zero());
        EXPECT_TRUE(span.add(rep));
      }
    }
  }
}

TEST(Cohomology, ThreadCountDoesNotChangeTheMatrix) {
  Rng rng(49);
  const TwistedOperator op = three_dim_space_operator(rng);
  for (std::size_t degree = 0; degree <= 2; ++degree) {
    const Mat one = twisted_differential_matrix(op, degree, 1);
    EXPECT_EQ(one, twisted_differential_matrix(op, degree, 3));
    EXPECT_EQ(one, twisted_differential_matrix(op, degree, 0));
  }
}

TEST(Cohomology, OracleDifferentialHasTheSameRank) {
  Rng rng(50);
  for (int it = 0; it < 4; ++it) {
    const TwistedOperator op = three_dim_space_operator(rng);
    const oracle::TwistedComplex ref(op);
    for (std::size_t degree = 0; degree <= 2; ++degree) {
      EXPECT_EQ(rank(twisted_differential_matrix(op, degree)), oracle::bareiss_rank(ref.differential(degree)));
    }
  }
}

TEST(Cohomology, CapIsEnforced) {
  const Workspace ws = testing::load_fixtures({"nijenhuis_op.json"});
  const auto& op = ws.get<TwistedOperator>("nij");
  EXPECT_THROW((void)cohomology_dims(op, 2, 5), TooLarge);
  EXPECT_EQ(twisted_cochain_dim(op, 0), 3u);
  EXPECT_EQ(twisted_cochain_dim(op, 1), 9u);
  EXPECT_EQ(twisted_cochain_dim(op, 2), 3u);
}

}  // namespace
}  // namespace trilie
