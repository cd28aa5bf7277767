#pragma once

#include "trilie/nslie.hpp"
#include "trilie/report.hpp"
#include "trilie/structures.hpp"
#include "trilie/twistop.hpp"

#include <cstddef>

namespace trilie {

/// Linear form on an algebra, given by its values on the basis.
struct TraceMap {
  Vec coeffs;

  [[nodiscard]] std::size_t dim() const { return coeffs.size(); }
  [[nodiscard]] Rational operator()(const Vec& x) const { return dot(coeffs, x); }
  [[nodiscard]] Rational at(Index i) const { return coeffs[i]; }

  friend bool operator==(const TraceMap&, const TraceMap&) = default;
};

/// tau([e_i, e_j]) = 0 on i<j.
Report check_trace(const LieAlgebra& g, const TraceMap& tau);
/// tau([e_i, e_j]_*) = 0 on i<j.
Report check_trace(const NSLieAlgebra& a, const TraceMap& tau);

/// [x,y,z] = tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y]. Throws NotTrace.
ThreeLieAlgebra induce_3lie(const LieAlgebra& g, const TraceMap& tau);
/// rho_tau(x,y) = tau(x)rho(y) - tau(y)rho(x). Throws NotTrace.
Representation3 induce_rep(const LieAlgebra& g, const RepresentationLie& rho, const TraceMap& tau);
/// theta_tau(x,y,z) = tau(x)theta(y,z) + tau(y)theta(z,x) + tau(z)theta(x,y).
/// Throws NotTrace, or ValidationFailure when theta is not a cocycle.
TwoCocycle3 induce_cocycle(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta,
                           const TraceMap& tau);

/// T: V -> g twisted by a binary 2-cocycle.
struct LieTwistedOperator {
  LieAlgebra algebra;
  RepresentationLie rep;
  TwoCocycleLie cocycle;
  LinearMap map;

  [[nodiscard]] std::size_t algebra_dim() const { return algebra.dim(); }
  [[nodiscard]] std::size_t space_dim() const { return rep.space_dim; }
  void require_shapes() const;

  friend bool operator==(const LieTwistedOperator&, const LieTwistedOperator&) = default;
};

/// [Tu,Tv] = T(rho(Tu)v - rho(Tv)u + theta(Tu,Tv)) on u<v.
Report check_twisted_lie(const LieTwistedOperator& op);

/// (d theta)(x,y) = rho(x)theta y - rho(y)theta x - theta[x,y].
TwoCocycleLie coboundary_lie(const LieAlgebra& g, const RepresentationLie& rho, const LinearMap& theta1);

/// T = theta^-1 with cocycle -d theta. Throws NotInvertible.
LieTwistedOperator inverse_cochain_operator_lie(const LieAlgebra& g, const RepresentationLie& rho,
                                                const LinearMap& theta0);

/// The same map in the induced ternary context.
/// Throws NotTrace, or ValidationFailure when the binary operator is not twisted.
TwistedOperator induced_twisted(const LieTwistedOperator& op, const TraceMap& tau);

/// {u,v} = rho(Tu)v, [[u,v]] = theta(Tu,Tv). Throws ValidationFailure.
NSLieAlgebra ns_from_twisted_lie(const LieTwistedOperator& op);

/// {x,y,z} = tau(x){y,z} - tau(y){x,z}, [[x,y,z]] = cyclic tau(x)[[y,z]],
/// without validating anything.
ThreeNSLieAlgebra induce_3ns_unchecked(const NSLieAlgebra& a, const TraceMap& tau);
/// As above. Throws ValidationFailure unless check_ns_binary passes and
/// NotTrace unless tau kills the star bracket.
ThreeNSLieAlgebra induce_3ns(const NSLieAlgebra& a, const TraceMap& tau);

/// tau o T on V.
TraceMap pullback(const TraceMap& tau, const LinearMap& map);

/// Builds the ternary NS structure on V twice: through the induced twisted
/// operator, and through the binary NS algebra induced with `tau_prime`.
/// Identities "curly_routes" and "skew_routes" compare the two tables.
Report diagram_check(const LieTwistedOperator& op, const TraceMap& tau, const TraceMap& tau_prime);
/// tau_prime = tau o T.
Report diagram_check(const LieTwistedOperator& op, const TraceMap& tau);

/// Checks that the route difference equals
/// (tau'(u) - tau(Tu)) rho(Tv)w - (tau'(v) - tau(Tv)) rho(Tu)w and the cyclic
/// sum of (tau'(u) - tau(Tu)) theta(Tv,Tw).
Report diagram_discrepancy(const LieTwistedOperator& op, const TraceMap& tau, const TraceMap& tau_prime);

/// Context (g, ad, theta, T) on V = g.
LieTwistedOperator adjoint_context(const LieAlgebra& g, const TwoCocycleLie& theta, const LinearMap& map);

}  // namespace trilie
