#include "support.hpp"

#include "trilie/cochain.hpp"
#include "trilie/errors.hpp"

#include <gtest/gtest.h>

namespace trilie {
namespace {

using testing::Rng;

Vec e(std::size_t n, std::size_t i) { return Vec::unit(n, i); }

TEST(ThreeLie, WorkedExampleAlgebraSatisfiesFilippov) {
  const ThreeLieAlgebra g = testing::a3();
  EXPECT_EQ(g.basis_bracket(0, 1, 2), e(3, 1));
  EXPECT_EQ(g.basis_bracket(2, 0, 1), e(3, 1));
  EXPECT_EQ(g.basis_bracket(1, 0, 2), -e(3, 1));
  EXPECT_TRUE(check_filippov(g).passed());
  EXPECT_TRUE(check_filippov(testing::a4()).passed());
}

TEST(ThreeLie, BrokenTableFailsAtAHandCheckedTuple) {
  // [e0,e1,e2] = e0, [e0,e1,e3] = e1. With x1,x2 = e0,e1 and x3,x4,x5 = e0,e2,e3
  // the left side is 0 and the right side is [e0,e2,e1] = -e0.
  ThreeLieAlgebra g(4);
  g.set(0, 1, 2, e(4, 0));
  g.set(0, 1, 3, e(4, 1));
  const Report r = check_filippov(g);
  EXPECT_FALSE(r.passed());
  const Violation* v = r.find("filippov");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1, 0, 2, 3}));
  EXPECT_EQ(v->residual, e(4, 0));
}

TEST(ThreeLie, TransportIsAnIsomorphism) {
  Rng rng(21);
  for (int it = 0; it < 10; ++it) {
    const Mat p = rng.invertible(4);
    const ThreeLieAlgebra h = testing::transport(testing::a4(), p);
    EXPECT_TRUE(check_filippov(h).passed());
    EXPECT_TRUE(check_bracket_morphism(h, testing::a4(), p).passed());
    EXPECT_FALSE(check_bracket_morphism(h, testing::a4(), p * Rational(2)).passed());
  }
}

TEST(Representation, AdjointAndHandBuiltModules) {
  const ThreeLieAlgebra g = testing::a3();
  EXPECT_TRUE(check_rep3(g, adjoint(g)).passed());
  // rho(e0,e2) = D, all others zero: every term of both identities vanishes.
  Representation3 good(3, 2);
  good.set(0, 2, Mat{{1, 2}, {3, 4}});
  EXPECT_TRUE(check_rep3(g, good).passed());
  // rho(e0,e1) = I: the second identity at (e0,e1,e2; e0) leaves rho(e1,e0) = -I.
  Representation3 bad(3, 2);
  bad.set(0, 1, Mat::identity(2));
  EXPECT_FALSE(check_rep3(g, bad).passed());
}

TEST(Representation, ShapeGuards) {
  const ThreeLieAlgebra g = testing::a3();
  EXPECT_THROW(require_shapes(g, Representation3(4, 2)), ShapeMismatch);
  EXPECT_THROW(require_shapes(g, Representation3(3, 2), TwoCocycle3(3, 3)), ShapeMismatch);
  EXPECT_THROW((void)check_rep3(g, Representation3(2, 2)), ShapeMismatch);
}

TEST(Cocycle, CoboundaryMatchesHandExpansionOnWorkedExample) {
  // (d theta)(x,y,z) = [x,y,theta z] + [y,z,theta x] + [z,x,theta y] - theta[x,y,z] with the adjoint module.
  Rng rng(22);
  const ThreeLieAlgebra g = testing::a3();
  for (int it = 0; it < 10; ++it) {
    const Mat theta = rng.mat(3, 3);
    const TwoCocycle3 d = coboundary(g, adjoint(g), theta);
    const Vec x = e(3, 0), y = e(3, 1), z = e(3, 2);
    const Vec expected = g.bracket(x, y, theta * z) + g.bracket(y, z, theta * x) + g.bracket(z, x, theta * y) -
                         theta * g.bracket(x, y, z);
    EXPECT_EQ(d.basis_value(0, 1, 2), expected);
    EXPECT_TRUE(check_cocycle3(g, adjoint(g), d).passed());
  }
}

TEST(Cocycle, CoboundaryAgreesWithGenericDifferential) {
  Rng rng(23);
  for (int it = 0; it < 20; ++it) {
    const testing::Context3 c = testing::random_context(rng);
    const Mat theta = rng.mat(c.rep.space_dim, c.algebra.dim());
    const Cochain viaCe = ce_diff(c.algebra, c.rep, Cochain::from_linear_map(theta));
    EXPECT_EQ(viaCe, Cochain::from_cocycle(coboundary(c.algebra, c.rep, theta)));
  }
}

TEST(Cocycle, NonCocycleIsRejected) {
  const ThreeLieAlgebra g = testing::a4();
  TwoCocycle3 theta(4, 4);
  theta.set(0, 1, 2, e(4, 0));
  EXPECT_FALSE(check_cocycle3(g, adjoint(g), theta).passed());
  EXPECT_THROW((void)semidirect_twisted(g, adjoint(g), theta), ValidationFailure);
  EXPECT_FALSE(check_filippov(semidirect_unchecked(g, adjoint(g), theta)).passed());
}

TEST(Semidirect, BracketComponentsFollowTheDefinition) {
  Rng rng(24);
  const ThreeLieAlgebra g = testing::a3();
  const Representation3 rho = adjoint(g);
  const TwoCocycle3 theta = coboundary(g, rho, rng.mat(3, 3));
  const ThreeLieAlgebra big = semidirect_twisted(g, rho, theta);
  ASSERT_EQ(big.dim(), 6u);
  // [(e0,0),(e1,0),(e2,0)] = ([e0,e1,e2], theta(e0,e1,e2))
  Vec top(6);
  top[1] = 1;
  for (std::size_t a = 0; a < 3; ++a) top[3 + a] = theta.basis_value(0, 1, 2)[a];
  EXPECT_EQ(big.basis_bracket(0, 1, 2), top);
  // [(e0,0),(e1,0),(0,v2)] = (0, rho(e0,e1) v2)
  Vec mixed(6);
  const Vec r = rho.basis_op(0, 1).column(2);
  for (std::size_t a = 0; a < 3; ++a) mixed[3 + a] = r[a];
  EXPECT_EQ(big.basis_bracket(0, 1, 5), mixed);
  EXPECT_TRUE(big.basis_bracket(0, 4, 5).is_zero());
}

TEST(Semidirect, RandomContextsGiveThreeLieAlgebras) {
  Rng rng(25);
  for (int it = 0; it < 15; ++it) {
    const testing::Context3 c = testing::random_context(rng);
    ASSERT_TRUE(check_rep3(c.algebra, c.rep).passed());
    ASSERT_TRUE(check_cocycle3(c.algebra, c.rep, c.cocycle).passed());
    EXPECT_TRUE(check_filippov(semidirect_twisted(c.algebra, c.rep, c.cocycle)).passed());
  }
}

TEST(Semidirect, ShiftByCoboundaryIsAnIsomorphism) {
  Rng rng(26);
  for (int it = 0; it < 10; ++it) {
    const testing::Context3 c = testing::random_context(rng);
    const Mat theta1 = rng.mat(c.rep.space_dim, c.algebra.dim());
    EXPECT_TRUE(check_semidirect_iso(c.algebra, c.rep, c.cocycle, theta1).passed());
    if (!coboundary(c.algebra, c.rep, theta1).values.is_zero()) {
      const std::size_t total = c.algebra.dim() + c.rep.space_dim;
      EXPECT_FALSE(check_semidirect_iso(c.algebra, c.rep, c.cocycle, theta1, Mat::identity(total)).passed());
    }
  }
}

TEST(Lie, ExamplesSatisfyJacobiAndTheirModules) {
  for (const LieAlgebra& g : {testing::l3(), testing::heisenberg(), testing::gl2(), testing::two_affine()}) {
    EXPECT_TRUE(check_jacobi(g).passed());
    EXPECT_TRUE(check_rep_lie(g, adjoint(g)).passed());
  }
  LieAlgebra bad(3);
  bad.set(0, 1, e(3, 0));
  bad.set(1, 2, e(3, 1));
  bad.set(0, 2, e(3, 2));
  EXPECT_FALSE(check_jacobi(bad).passed());
}

TEST(Lie, BinaryCoboundariesAreCocycles) {
  Rng rng(27);
  for (int it = 0; it < 10; ++it) {
    const LieAlgebra g = testing::random_lie(rng);
    const RepresentationLie rho = adjoint(g);
    EXPECT_TRUE(check_cocycle_lie(g, rho, coboundary_lie(g, rho, rng.mat(g.dim(), g.dim()))).passed());
  }
}

}  // namespace
}  // namespace trilie
