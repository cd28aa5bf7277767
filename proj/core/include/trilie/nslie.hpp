#pragma once

#include "trilie/report.hpp"
#include "trilie/structures.hpp"
#include "trilie/twistop.hpp"

#include <cstddef>

namespace trilie {

/// Ternary NS-Lie algebra. The curly product {x,y,z} is skew in x, y only and
/// is stored as the operator family L(x,y)z; the double bracket is fully skew.
struct ThreeNSLieAlgebra {
  Representation3 curly;
  ThreeLieAlgebra skew;

  ThreeNSLieAlgebra() = default;
  explicit ThreeNSLieAlgebra(std::size_t dim) : curly(dim, dim), skew(dim) {}

  [[nodiscard]] std::size_t dim() const { return skew.dim(); }
  [[nodiscard]] Vec curly_value(const Vec& x, const Vec& y, const Vec& z) const { return curly.apply(x, y, z); }
  [[nodiscard]] Vec basis_curly(Index i, Index j, Index k) const { return curly.basis_op(i, j).column(k); }
  [[nodiscard]] Vec skew_value(const Vec& x, const Vec& y, const Vec& z) const { return skew.bracket(x, y, z); }
  /// {x,y,z} + {y,z,x} + {z,x,y}
  [[nodiscard]] Vec cyclic_curly(const Vec& x, const Vec& y, const Vec& z) const;
  /// [x,y,z]_* = cyclic curly + double bracket.
  [[nodiscard]] Vec star(const Vec& x, const Vec& y, const Vec& z) const;

  /// Sets {e_i,e_j,e_k} (and hence {e_j,e_i,e_k} = -value); i != j.
  void set_curly(Index i, Index j, Index k, const Vec& value);
  void set_skew(Index i, Index j, Index k, const Vec& value) { skew.set(i, j, k, value); }

  friend bool operator==(const ThreeNSLieAlgebra&, const ThreeNSLieAlgebra&) = default;
};

/// Binary NS-Lie algebra: {x,y} without symmetry, [[x,y]] skew.
struct NSLieAlgebra {
  RepresentationLie curly;  // curly.ops[i] column j = {e_i, e_j}
  LieAlgebra skew;

  NSLieAlgebra() = default;
  explicit NSLieAlgebra(std::size_t dim) : curly(dim, dim), skew(dim) {}

  [[nodiscard]] std::size_t dim() const { return skew.dim(); }
  [[nodiscard]] Vec curly_value(const Vec& x, const Vec& y) const { return curly.apply(x, y); }
  [[nodiscard]] Vec skew_value(const Vec& x, const Vec& y) const { return skew.bracket(x, y); }
  /// [x,y]_* = {x,y} - {y,x} + [[x,y]]
  [[nodiscard]] Vec star(const Vec& x, const Vec& y) const;
  void set_curly(Index i, Index j, const Vec& value) { curly.ops[i].set_column(j, value); }
  void set_skew(Index i, Index j, const Vec& value) { skew.set(i, j, value); }

  friend bool operator==(const NSLieAlgebra&, const NSLieAlgebra&) = default;
};

/// Skew symmetries plus the three compatibility identities on all basis
/// 5-tuples: "curly_left", "curly_cyclic", "skew_compat".
Report check_3ns(const ThreeNSLieAlgebra& a);

/// [.,.,.]_* as a table, without checking the axioms.
ThreeLieAlgebra star_bracket(const ThreeNSLieAlgebra& a);
/// As above; throws ValidationFailure unless check_3ns passes.
ThreeLieAlgebra subadjacent(const ThreeNSLieAlgebra& a);

/// {x,y,z} = [Nx,Ny,z], [[x,y,z]] = -N([Nx,y,z] + [x,Ny,z] + [x,y,Nz] - N[x,y,z]).
/// Throws NotNijenhuis.
ThreeNSLieAlgebra from_nijenhuis_ns(const ThreeLieAlgebra& g, const LinearMap& n);

struct LeftMultiplication {
  ThreeLieAlgebra algebra;  // subadjacent
  Representation3 rep;      // L(x,y)z = {x,y,z}
  TwoCocycle3 cocycle;      // [[.,.,.]]
  TwistedOperator identity;
  Report rep_report;
  Report cocycle_report;
  Report twisted_report;
};

/// Throws ValidationFailure unless check_3ns passes.
LeftMultiplication left_mult_package(const ThreeNSLieAlgebra& a);

/// {u,v,w} = rho(Tu,Tv)w, [[u,v,w]] = theta(Tu,Tv,Tw) on V.
/// Throws ValidationFailure when the operator is not twisted.
ThreeNSLieAlgebra from_twisted_ns(const TwistedOperator& op);

/// {x,y,z} = T rho(x,y) T^-1 z, [[x,y,z]] = T theta(x,y,z) on g.
/// Throws NotInvertible.
ThreeNSLieAlgebra compatible_from_invertible(const TwistedOperator& op);

/// Both binary identities on basis triples ("ns_left", "ns_skew") and the
/// Jacobi identity of the star bracket ("star_jacobi").
Report check_ns_binary(const NSLieAlgebra& a);

LieAlgebra star_bracket(const NSLieAlgebra& a);

}  // namespace trilie
