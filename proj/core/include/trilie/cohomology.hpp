#pragma once

#include "trilie/cochain.hpp"
#include "trilie/twistop.hpp"

#include <cstddef>
#include <vector>

namespace trilie {

/// rho_theta(u,v)x = [Tu,Tv,x] - T(rho(Tv,x)u + rho(x,Tu)v + theta(x,Tu,Tv)).
Vec rho_theta(const TwistedOperator& op, const Vec& u, const Vec& v, const Vec& x);
/// rho_theta as a representation of (V, [.,.,.]_T) on g.
Representation3 rho_theta_rep(const TwistedOperator& op);

/// Generic CE differential of (V, [.,.,.]_T) with coefficients in (g, rho_theta).
Cochain twisted_diff_generic(const TwistedOperator& op, const Cochain& f);
/// The same differential written out term by term in T, rho and theta.
Cochain twisted_diff_expanded(const TwistedOperator& op, const Cochain& f);
/// Computes both forms; throws FormulaDisagreement on the first differing
/// argument tuple and otherwise returns the generic one.
Cochain twisted_diff(const TwistedOperator& op, const Cochain& f);

/// delta(X)v = T(rho(X)v + theta(X,Tv)) - [X,Tv], without the closedness check.
Cochain delta_unchecked(const TwistedOperator& op, const ZeroCochain& x);
/// As above; throws ValidationFailure when the result is not closed.
Cochain delta_op(const TwistedOperator& op, const ZeroCochain& x);

/// Dimension of the degree-n twisted cochain space (n = 0 is g wedge g).
std::size_t twisted_cochain_dim(const TwistedOperator& op, std::size_t degree);

/// Matrix of D from degree n to n+1 in flat coefficient bases. Columns are
/// assembled on `threads` workers (0 = hardware concurrency); the result does
/// not depend on the thread count.
Mat twisted_differential_matrix(const TwistedOperator& op, std::size_t degree, unsigned threads = 0);

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_cohomology = 0;
  /// Flat coefficient vectors spanning a complement of B in Z, each reduced
  /// against the echelon basis of B.
  std::vector<Vec> representatives;
};

inline constexpr std::size_t kDefaultCochainCap = 20000;

/// Throws TooLarge when dim C^n or dim C^(n+1) exceeds `cap`.
CohomologyResult cohomology_dims(const TwistedOperator& op, std::size_t degree,
                                 std::size_t cap = kDefaultCochainCap, unsigned threads = 0);

}  // namespace trilie
