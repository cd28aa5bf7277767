#include "support.hpp"

#include "trilie/errors.hpp"

#include <gtest/gtest.h>

namespace trilie {
namespace {

using testing::Rng;

Vec e(std::size_t n, std::size_t i) { return Vec::unit(n, i); }

TEST(Trace, FixturesAndRandomTraces) {
  const Workspace ws = testing::load_fixtures({"l3.json"});
  const LieAlgebra& g = ws.get<LieAlgebra>("L3");
  EXPECT_TRUE(check_trace(g, ws.get<TraceMap>("tau")).passed());
  EXPECT_FALSE(check_trace(g, ws.get<TraceMap>("tau_bad")).passed());
  EXPECT_THROW((void)induce_3lie(g, ws.get<TraceMap>("tau_bad")), NotTrace);
  Rng rng(71);
  for (int it = 0; it < 10; ++it) {
    const LieAlgebra h = testing::random_lie(rng);
    EXPECT_TRUE(check_trace(h, testing::random_trace(h, rng)).passed());
  }
}

TEST(Induce, ThreeLieBracketOnTheSmallExample) {
  const ThreeLieAlgebra a = induce_3lie(testing::l3(), TraceMap{Vec{0, 0, 1}});
  // tau(e2)[e0,e1]
  EXPECT_EQ(a.basis_bracket(0, 1, 2), e(3, 1));
  EXPECT_TRUE(check_filippov(a).passed());
}

TEST(Induce, RandomAlgebrasModulesAndCocycles) {
  Rng rng(72);
  for (int it = 0; it < 30; ++it) {
    const LieAlgebra g = testing::random_lie(rng);
    const TraceMap tau = testing::random_trace(g, rng);
    const ThreeLieAlgebra a = induce_3lie(g, tau);
    EXPECT_TRUE(check_filippov(a).passed());
    const RepresentationLie rho = adjoint(g);
    const Representation3 rho3 = induce_rep(g, rho, tau);
    EXPECT_TRUE(check_rep3(a, rho3).passed());
    const TwoCocycleLie theta = coboundary_lie(g, rho, rng.mat(g.dim(), g.dim()));
    EXPECT_TRUE(check_cocycle3(a, rho3, induce_cocycle(g, rho, theta, tau)).passed());
    // Hand formula on the first triple.
    if (g.dim() >= 3) {
      const Vec x = e(g.dim(), 0), y = e(g.dim(), 1), z = e(g.dim(), 2);
      EXPECT_EQ(a.bracket(x, y, z), tau(x) * g.bracket(y, z) + tau(y) * g.bracket(z, x) + tau(z) * g.bracket(x, y));
      EXPECT_EQ(rho3.act(x, y), tau(x) * rho.act(y) - tau(y) * rho.act(x));
    }
  }
}

TEST(Induce, NonCocycleIsRejected) {
  const LieAlgebra g = testing::l3();
  TwoCocycleLie theta(3, 3);
  theta.set(0, 2, e(3, 0));  // d theta(e0,e1,e2) = e1
  ASSERT_FALSE(check_cocycle_lie(g, adjoint(g), theta).passed());
  EXPECT_THROW((void)induce_cocycle(g, adjoint(g), theta, TraceMap{Vec{0, 0, 1}}), ValidationFailure);
}

TEST(Induce, TwistedOperatorsStayTwisted) {
  Rng rng(73);
  for (int it = 0; it < 30; ++it) {
    const LieTwistedOperator op = testing::random_lie_twisted(rng);
    const TwistedOperator lifted = induced_twisted(op, testing::random_trace(op.algebra, rng));
    EXPECT_EQ(lifted.map, op.map);
    EXPECT_TRUE(check_twisted(lifted).passed());
  }
}

TEST(Induce, PulledBackTraceKillsTheStarBracket) {
  Rng rng(74);
  for (int it = 0; it < 15; ++it) {
    const LieTwistedOperator op = testing::random_lie_twisted(rng);
    const TraceMap tau = testing::random_trace(op.algebra, rng);
    const NSLieAlgebra a = ns_from_twisted_lie(op);
    EXPECT_TRUE(check_trace(a, pullback(tau, op.map)).passed());
    const ThreeNSLieAlgebra lifted = induce_3ns(a, pullback(tau, op.map));
    EXPECT_TRUE(check_3ns(lifted).passed());
  }
}

TEST(Diagram, SmallExampleCommutes) {
  const Workspace ws = testing::load_fixtures({"l3.json"});
  const auto& op = ws.get<LieTwistedOperator>("L3op");
  const auto& tau = ws.get<TraceMap>("tau");
  const Report r = diagram_check(op, tau);
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(induce_3ns(ns_from_twisted_lie(op), pullback(tau, op.map)), from_twisted_ns(induced_twisted(op, tau)));
}

TEST(Diagram, RandomInstancesCommute) {
  Rng rng(75);
  for (int it = 0; it < 15; ++it) {
    const LieTwistedOperator op = testing::random_lie_twisted(rng);
    const Report r = diagram_check(op, testing::random_trace(op.algebra, rng));
    EXPECT_TRUE(r.passed()) << r.summary();
  }
}

TEST(Diagram, AdjointContext) {
  Rng rng(77);
  for (int it = 0; it < 5; ++it) {
    const LieTwistedOperator op = testing::random_lie_twisted(rng);
    const LieTwistedOperator built = adjoint_context(op.algebra, op.cocycle, op.map);
    EXPECT_EQ(built, op);
    EXPECT_TRUE(diagram_check(built, testing::random_trace(op.algebra, rng)).passed());
  }
}

TEST(Diagram, OtherTracesDifferByTheDiscrepancyFormula) {
  Rng rng(76);
  int differing = 0;
  for (int it = 0; it < 20; ++it) {
    const LieTwistedOperator op = testing::random_lie_twisted(rng);
    const TraceMap tau = testing::random_trace(op.algebra, rng);
    const NSLieAlgebra a = ns_from_twisted_lie(op);
    const TraceMap other = testing::random_trace(a, rng);
    EXPECT_TRUE(diagram_discrepancy(op, tau, other).passed());
    if (other != pullback(tau, op.map) && !diagram_check(op, tau, other).passed()) ++differing;
  }
  EXPECT_GT(differing, 0);
}

}  // namespace
}  // namespace trilie
