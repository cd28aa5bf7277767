#pragma once

#include "trilie/alternating.hpp"
#include "trilie/matrix.hpp"
#include "trilie/report.hpp"

#include <cstddef>
#include <vector>

namespace trilie {

/// Linear map between coordinate spaces: a target_dim x source_dim matrix
/// whose columns are the images of the source basis vectors.
using LinearMap = Mat;

/// 3-Lie algebra given by structure constants on increasing triples.
struct ThreeLieAlgebra {
  Alternating<Vec> table;

  ThreeLieAlgebra() = default;
  explicit ThreeLieAlgebra(std::size_t dim) : table(dim, 3, Vec(dim)) {}

  [[nodiscard]] std::size_t dim() const { return table.dim(); }
  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y, const Vec& z) const { return table.eval(x, y, z); }
  [[nodiscard]] Vec basis_bracket(Index i, Index j, Index k) const { return table.at({i, j, k}); }
  void set(Index i, Index j, Index k, const Vec& value) { table.set({i, j, k}, value); }

  friend bool operator==(const ThreeLieAlgebra&, const ThreeLieAlgebra&) = default;
};

struct LieAlgebra {
  Alternating<Vec> table;

  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : table(dim, 2, Vec(dim)) {}

  [[nodiscard]] std::size_t dim() const { return table.dim(); }
  [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const { return table.eval(x, y); }
  [[nodiscard]] Vec basis_bracket(Index i, Index j) const { return table.at({i, j}); }
  void set(Index i, Index j, const Vec& value) { table.set({i, j}, value); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;
};

/// rho(e_i, e_j) as a space_dim x space_dim matrix, skew in (i, j).
struct Representation3 {
  std::size_t space_dim = 0;
  Alternating<Mat> ops;

  Representation3() = default;
  Representation3(std::size_t algebra_dim, std::size_t space)
      : space_dim(space), ops(algebra_dim, 2, Mat(space, space)) {}

  [[nodiscard]] std::size_t algebra_dim() const { return ops.dim(); }
  [[nodiscard]] Mat act(const Vec& x, const Vec& y) const { return ops.eval(x, y); }
  [[nodiscard]] Vec apply(const Vec& x, const Vec& y, const Vec& v) const { return act(x, y) * v; }
  [[nodiscard]] Mat basis_op(Index i, Index j) const { return ops.at({i, j}); }
  void set(Index i, Index j, const Mat& m) { ops.set({i, j}, m); }

  friend bool operator==(const Representation3&, const Representation3&) = default;
};

struct RepresentationLie {
  std::size_t space_dim = 0;
  std::vector<Mat> ops;

  RepresentationLie() = default;
  RepresentationLie(std::size_t algebra_dim, std::size_t space)
      : space_dim(space), ops(algebra_dim, Mat(space, space)) {}

  [[nodiscard]] std::size_t algebra_dim() const { return ops.size(); }
  [[nodiscard]] Mat act(const Vec& x) const;
  [[nodiscard]] Vec apply(const Vec& x, const Vec& v) const { return act(x) * v; }

  friend bool operator==(const RepresentationLie&, const RepresentationLie&) = default;
};

/// Fully skew trilinear map g^3 -> V.
struct TwoCocycle3 {
  Alternating<Vec> values;

  TwoCocycle3() = default;
  TwoCocycle3(std::size_t algebra_dim, std::size_t space_dim) : values(algebra_dim, 3, Vec(space_dim)) {}

  [[nodiscard]] std::size_t algebra_dim() const { return values.dim(); }
  [[nodiscard]] std::size_t space_dim() const { return values.zero().size(); }
  [[nodiscard]] Vec eval(const Vec& x, const Vec& y, const Vec& z) const { return values.eval(x, y, z); }
  [[nodiscard]] Vec basis_value(Index i, Index j, Index k) const { return values.at({i, j, k}); }
  void set(Index i, Index j, Index k, const Vec& v) { values.set({i, j, k}, v); }

  friend bool operator==(const TwoCocycle3&, const TwoCocycle3&) = default;
};

struct TwoCocycleLie {
  Alternating<Vec> values;

  TwoCocycleLie() = default;
  TwoCocycleLie(std::size_t algebra_dim, std::size_t space_dim) : values(algebra_dim, 2, Vec(space_dim)) {}

  [[nodiscard]] std::size_t algebra_dim() const { return values.dim(); }
  [[nodiscard]] std::size_t space_dim() const { return values.zero().size(); }
  [[nodiscard]] Vec eval(const Vec& x, const Vec& y) const { return values.eval(x, y); }
  [[nodiscard]] Vec basis_value(Index i, Index j) const { return values.at({i, j}); }
  void set(Index i, Index j, const Vec& v) { values.set({i, j}, v); }

  friend bool operator==(const TwoCocycleLie&, const TwoCocycleLie&) = default;
};

Vec bracket3(const ThreeLieAlgebra& g, const Vec& x, const Vec& y, const Vec& z);

Representation3 adjoint(const ThreeLieAlgebra& g);
RepresentationLie adjoint(const LieAlgebra& g);

/// Row-major flattening, used for matrix-valued residuals.
Vec flatten(const Mat& m);

// Shape guards; each throws ShapeMismatch.
void require_shapes(const ThreeLieAlgebra& g, const Representation3& rho);
void require_shapes(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta);
void require_shapes(const LieAlgebra& g, const RepresentationLie& rho);
void require_shapes(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta);

// Axiom checkers. Every identity below is multilinear, so checking basis
// tuples is enough; skew-symmetry in a group of slots further restricts the
// indices of that group to increasing order.

/// [x1,x2,[x3,x4,x5]] on i1<i2, i3<i4<i5.
Report check_filippov(const ThreeLieAlgebra& g);
/// Jacobi on i<j<k.
Report check_jacobi(const LieAlgebra& g);
/// First identity on i1<i2, i3<i4; second (skew in x1,x2,x3) on i1<i2<i3, any i4.
Report check_rep3(const ThreeLieAlgebra& g, const Representation3& rho);
/// rho([x,y]) = [rho(x), rho(y)] on i<j.
Report check_rep_lie(const LieAlgebra& g, const RepresentationLie& rho);
/// 2-cocycle identity on x1<x2, y1<y2<y3.
Report check_cocycle3(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta);
/// Cyclic binary cocycle identity on i<j<k.
Report check_cocycle_lie(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta);

/// Coboundary of a 1-cochain:
/// (d theta)(x,y,z) = rho(x,y)theta z + rho(y,z)theta x + rho(z,x)theta y - theta[x,y,z].
TwoCocycle3 coboundary(const ThreeLieAlgebra& g, const Representation3& rho, const LinearMap& theta1);

/// g (+) V with the twisted bracket; indices 0..dim g-1 are g, the rest V.
/// Throws ValidationFailure when an input fails its checker.
ThreeLieAlgebra semidirect_twisted(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta);
/// Same, without validating the inputs.
ThreeLieAlgebra semidirect_unchecked(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta);

/// map(src[x,y,z]) = dst[map x, map y, map z] on increasing basis triples.
Report check_bracket_morphism(const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst, const LinearMap& map);

/// The map (x,u) -> (x, u - theta1 x) as a matrix on g (+) V.
LinearMap semidirect_shift_map(std::size_t algebra_dim, const LinearMap& theta1);

/// Checks that `psi` is a morphism from g x|_theta V to g x|_{theta + d theta1} V.
/// With `psi` omitted the canonical shift map is used.
Report check_semidirect_iso(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta,
                            const LinearMap& theta1);
Report check_semidirect_iso(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta,
                            const LinearMap& theta1, const LinearMap& psi);

}  // namespace trilie
