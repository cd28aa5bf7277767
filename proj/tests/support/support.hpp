#pragma once

#include "trilie/cohomology.hpp"
#include "trilie/deform.hpp"
#include "trilie/induce.hpp"
#include "trilie/io.hpp"
#include "trilie/nslie.hpp"
#include "trilie/structures.hpp"
#include "trilie/twistop.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace trilie::testing {

/// Seeded generator of small rationals and matrices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  /// Integer in [lo, hi].
  Rational integer(int lo = -3, int hi = 3) { return {uniform(lo, hi)}; }
  /// p/q with |p| <= 4, 1 <= q <= 3.
  Rational fraction();
  /// Nonzero p/q.
  Rational nonzero();
  Vec vec(std::size_t n);
  Mat mat(std::size_t rows, std::size_t cols);
  /// Sparse-ish integer matrix; about half of the entries are zero.
  Mat sparse_mat(std::size_t rows, std::size_t cols);
  Mat invertible(std::size_t n);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Named examples.
ThreeLieAlgebra a3();                 // [e0,e1,e2] = e1
ThreeLieAlgebra a4();                 // simple 4-dimensional algebra
LinearMap nij_matrix(const Rational& d, const Rational& c, const Rational& f);
LieAlgebra l3();                      // [e0,e1] = e1, e2 central
LieAlgebra heisenberg();              // [e0,e1] = e2
LieAlgebra gl2();                     // basis E11, E12, E21, E22
LieAlgebra two_affine();              // r2 + r2

/// x -> P^-1 [Px, Py, Pz]; isomorphic copy in a new basis.
ThreeLieAlgebra transport(const ThreeLieAlgebra& g, const Mat& p);
LieAlgebra transport(const LieAlgebra& g, const Mat& p);

/// A random 3-Lie algebra: a basis change of A3, A4 or an induced algebra.
ThreeLieAlgebra random_3lie(Rng& rng);
LieAlgebra random_lie(Rng& rng);
/// Random element of the annihilator of [g, g].
TraceMap random_trace(const LieAlgebra& g, Rng& rng);
TraceMap random_trace(const NSLieAlgebra& a, Rng& rng);

struct Context3 {
  ThreeLieAlgebra algebra;
  Representation3 rep;
  TwoCocycle3 cocycle;
};
/// Adjoint (or induced) representation with a coboundary cocycle.
Context3 random_context(Rng& rng);

/// Random twisted operator: a Nijenhuis package, an inverse-cochain operator,
/// or the zero map, on a randomly transported algebra.
TwistedOperator random_twisted(Rng& rng);
/// Invertible twisted operator (inverse-cochain type).
TwistedOperator random_invertible_twisted(Rng& rng);
/// Nijenhuis package of a transported A3 with a random N.
TwistedOperator random_nijenhuis_op(Rng& rng);
/// Binary operator of inverse-cochain type with the adjoint representation.
LieTwistedOperator random_lie_twisted(Rng& rng);

/// Fixture directory set by the build.
std::string fixture_path(const std::string& file);
Workspace load_fixtures(std::initializer_list<const char*> files);

/// A random 1-cocycle (closed 1-cochain) of op, as a linear map V -> g.
LinearMap random_closed_term(const TwistedOperator& op, Rng& rng);
ZeroCochain random_bivector(std::size_t dim, Rng& rng);

}  // namespace trilie::testing
