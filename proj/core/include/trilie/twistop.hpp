#pragma once

#include "trilie/report.hpp"
#include "trilie/structures.hpp"

#include <array>

namespace trilie {

/// Linear map T: V -> g together with its context (g, rho, theta).
struct TwistedOperator {
  ThreeLieAlgebra algebra;
  Representation3 rep;
  TwoCocycle3 cocycle;
  LinearMap map;  // dim g x dim V

  [[nodiscard]] std::size_t algebra_dim() const { return algebra.dim(); }
  [[nodiscard]] std::size_t space_dim() const { return rep.space_dim; }
  /// Throws ShapeMismatch when the components disagree.
  void require_shapes() const;

  friend bool operator==(const TwistedOperator&, const TwistedOperator&) = default;
};

struct TwistedMorphism {
  LinearMap phi;  // g -> g'
  LinearMap psi;  // V -> V'
};

/// [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + theta(Tu,Tv,Tw))
/// on u<v<w; both sides are skew in (u,v,w).
Report check_twisted(const TwistedOperator& op);

/// Graph test: (Tu,u) span a subalgebra of the twisted semidirect product.
Report check_graph_subalgebra(const TwistedOperator& op);

/// rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v + theta(Tu,Tv,Tw).
Vec induced_value(const TwistedOperator& op, const Vec& u, const Vec& v, const Vec& w);
ThreeLieAlgebra induced_bracket_unchecked(const TwistedOperator& op);
/// Induced 3-Lie bracket on V. Throws ValidationFailure when op is not twisted
/// or T fails to intertwine the brackets.
ThreeLieAlgebra induced_bracket(const TwistedOperator& op);

/// phi is a 3-Lie morphism, psi rho(x,y) = rho'(phi x, phi y) psi,
/// psi theta = theta' (phi x phi x phi), phi T = T' psi.
Report check_twisted_morphism(const TwistedMorphism& m, const TwistedOperator& src, const TwistedOperator& dst);

/// T (Id - theta1 T)^-1 in the context (g, rho, theta + d theta1). Throws NotInvertible.
TwistedOperator coboundary_shift(const TwistedOperator& op, const LinearMap& theta1);

/// True iff Id + theta1 T is invertible. Throws ValidationFailure when theta1
/// is not a 1-cocycle.
bool check_admissible(const TwistedOperator& op, const LinearMap& theta1);

/// T (Id + theta1 T)^-1 in the same context. Throws NotAdmissible, or
/// ValidationFailure when theta1 is not a cocycle or the induced brackets are
/// not intertwined by Id + theta1 T.
TwistedOperator gauge_transform(const TwistedOperator& op, const LinearMap& theta1);

/// T = theta0^-1 with theta = -d theta0. Throws NotInvertible.
TwistedOperator inverse_cochain_operator(const ThreeLieAlgebra& g, const Representation3& rho, const LinearMap& theta0);

/// Nijenhuis identity on i<j<k (both sides are skew).
Report nijenhuis_check(const ThreeLieAlgebra& g, const LinearMap& n);

/// [x,y,z]_N = [Nx,Ny,z]+[Nx,y,Nz]+[x,Ny,Nz] - N([Nx,y,z]+[x,Ny,z]+[x,y,Nz] - N[x,y,z]).
ThreeLieAlgebra nijenhuis_deformed(const ThreeLieAlgebra& g, const LinearMap& n);
/// rho(x,y)z = [Nx,Ny,z].
Representation3 nijenhuis_rep(const ThreeLieAlgebra& g, const LinearMap& n);
/// -N([Nx,y,z]+[x,Ny,z]+[x,y,Nz] - N[x,y,z]).
TwoCocycle3 nijenhuis_cocycle(const ThreeLieAlgebra& g, const LinearMap& n);

struct NijenhuisPackage {
  ThreeLieAlgebra deformed;
  Representation3 rep;
  TwoCocycle3 cocycle;
  TwistedOperator identity;
  /// filippov, representation, cocycle, twisted, in that order.
  std::array<Report, 4> validation;

  [[nodiscard]] bool valid() const;
};

/// Throws NotNijenhuis; the four outputs are validated and reported, not assumed.
NijenhuisPackage nijenhuis_package(const ThreeLieAlgebra& g, const LinearMap& n);

}  // namespace trilie
