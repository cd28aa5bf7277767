#include "trilie/induce.hpp"

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

namespace trilie {

namespace {

void require_trace_dim(std::size_t dim, const TraceMap& tau) {
  if (tau.dim() != dim) throw ShapeMismatch("trace map has the wrong dimension");
}

void require_trace(const LieAlgebra& g, const TraceMap& tau) {
  if (!check_trace(g, tau).passed()) throw NotTrace("linear form does not vanish on brackets");
}

/// tau(x)f(y,z) + tau(y)f(z,x) + tau(z)f(x,y) on basis indices.
template <class F>
Vec cyclic_weighted(const TraceMap& tau, Index i, Index j, Index k, F&& f) {
  Vec r = tau.at(i) * f(j, k);
  r.add_scaled(tau.at(j), f(k, i));
  r.add_scaled(tau.at(k), f(i, j));
  return r;
}

}  // namespace

Report check_trace(const LieAlgebra& g, const TraceMap& tau) {
  require_trace_dim(g.dim(), tau);
  Report report("trace");
  for (const auto& p : combinations(g.dim(), 2)) report.check("trace", {p[0], p[1]}, tau(g.basis_bracket(p[0], p[1])));
  return report;
}

Report check_trace(const NSLieAlgebra& a, const TraceMap& tau) {
  require_trace_dim(a.dim(), tau);
  const std::size_t d = a.dim();
  Report report("trace");
  for (const auto& p : combinations(d, 2)) {
    report.check("trace", {p[0], p[1]}, tau(a.star(Vec::unit(d, p[0]), Vec::unit(d, p[1]))));
  }
  return report;
}

ThreeLieAlgebra induce_3lie(const LieAlgebra& g, const TraceMap& tau) {
  require_trace(g, tau);
  ThreeLieAlgebra out(g.dim());
  for (const auto& t : combinations(g.dim(), 3)) {
    out.set(t[0], t[1], t[2],
            cyclic_weighted(tau, t[0], t[1], t[2], [&](Index a, Index b) { return g.basis_bracket(a, b); }));
  }
  return out;
}

Representation3 induce_rep(const LieAlgebra& g, const RepresentationLie& rho, const TraceMap& tau) {
  require_shapes(g, rho);
  require_trace(g, tau);
  Representation3 out(g.dim(), rho.space_dim);
  for (const auto& p : combinations(g.dim(), 2)) {
    Mat m = tau.at(p[0]) * rho.ops[p[1]];
    m.add_scaled(-tau.at(p[1]), rho.ops[p[0]]);
    out.set(p[0], p[1], m);
  }
  return out;
}

TwoCocycle3 induce_cocycle(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta,
                           const TraceMap& tau) {
  require_shapes(g, rho, theta);
  require_trace(g, tau);
  if (!check_cocycle_lie(g, rho, theta).passed()) throw ValidationFailure("binary cochain is not a cocycle");
  TwoCocycle3 out(g.dim(), rho.space_dim);
  for (const auto& t : combinations(g.dim(), 3)) {
    out.set(t[0], t[1], t[2],
            cyclic_weighted(tau, t[0], t[1], t[2], [&](Index a, Index b) { return theta.basis_value(a, b); }));
  }
  return out;
}

void LieTwistedOperator::require_shapes() const {
  trilie::require_shapes(algebra, rep, cocycle);
  if (map.rows() != algebra.dim() || map.cols() != rep.space_dim) {
    throw ShapeMismatch("twisted operator: map must be dim g x dim V");
  }
}

Report check_twisted_lie(const LieTwistedOperator& op) {
  op.require_shapes();
  Report report("twisted_lie");
  const Mat& t = op.map;
  for (const auto& p : combinations(op.space_dim(), 2)) {
    const Vec tu = t.column(p[0]);
    const Vec tv = t.column(p[1]);
    Vec inner = op.rep.act(tu).column(p[1]);
    inner -= op.rep.act(tv).column(p[0]);
    inner += op.cocycle.eval(tu, tv);
    report.check("twisted_lie", {p[0], p[1]}, op.algebra.bracket(tu, tv) - t * inner);
  }
  return report;
}

TwoCocycleLie coboundary_lie(const LieAlgebra& g, const RepresentationLie& rho, const LinearMap& theta1) {
  require_shapes(g, rho);
  if (theta1.rows() != rho.space_dim || theta1.cols() != g.dim()) throw ShapeMismatch("1-cochain shape");
  TwoCocycleLie out(g.dim(), rho.space_dim);
  for (const auto& p : combinations(g.dim(), 2)) {
    Vec r = rho.ops[p[0]] * theta1.column(p[1]);
    r -= rho.ops[p[1]] * theta1.column(p[0]);
    r -= theta1 * g.basis_bracket(p[0], p[1]);
    out.set(p[0], p[1], r);
  }
  return out;
}

LieTwistedOperator inverse_cochain_operator_lie(const LieAlgebra& g, const RepresentationLie& rho,
                                                const LinearMap& theta0) {
  TwoCocycleLie theta = coboundary_lie(g, rho, theta0);
  const auto inv = try_inverse(theta0);
  if (!inv) throw NotInvertible("theta0 is singular");
  theta.values *= Rational(-1);
  return LieTwistedOperator{g, rho, theta, *inv};
}

TwistedOperator induced_twisted(const LieTwistedOperator& op, const TraceMap& tau) {
  op.require_shapes();
  if (!check_twisted_lie(op).passed()) throw ValidationFailure("binary operator is not twisted");
  return TwistedOperator{induce_3lie(op.algebra, tau), induce_rep(op.algebra, op.rep, tau),
                         induce_cocycle(op.algebra, op.rep, op.cocycle, tau), op.map};
}

NSLieAlgebra ns_from_twisted_lie(const LieTwistedOperator& op) {
  if (!check_twisted_lie(op).passed()) throw ValidationFailure("binary operator is not twisted");
  const std::size_t m = op.space_dim();
  NSLieAlgebra out(m);
  for (Index u = 0; u < m; ++u) out.curly.ops[u] = op.rep.act(op.map.column(u));
  for (const auto& p : combinations(m, 2)) {
    out.set_skew(p[0], p[1], op.cocycle.eval(op.map.column(p[0]), op.map.column(p[1])));
  }
  return out;
}

ThreeNSLieAlgebra induce_3ns_unchecked(const NSLieAlgebra& a, const TraceMap& tau) {
  const std::size_t d = a.dim();
  require_trace_dim(d, tau);
  ThreeNSLieAlgebra out(d);
  for (const auto& p : combinations(d, 2)) {
    Mat m = tau.at(p[0]) * a.curly.ops[p[1]];
    m.add_scaled(-tau.at(p[1]), a.curly.ops[p[0]]);
    out.curly.set(p[0], p[1], m);
  }
  for (const auto& t : combinations(d, 3)) {
    out.set_skew(t[0], t[1], t[2],
                 cyclic_weighted(tau, t[0], t[1], t[2], [&](Index i, Index j) { return a.skew.basis_bracket(i, j); }));
  }
  return out;
}

ThreeNSLieAlgebra induce_3ns(const NSLieAlgebra& a, const TraceMap& tau) {
  if (!check_ns_binary(a).passed()) throw ValidationFailure("not an NS-Lie algebra");
  if (!check_trace(a, tau).passed()) throw NotTrace("linear form does not vanish on the star bracket");
  return induce_3ns_unchecked(a, tau);
}

TraceMap pullback(const TraceMap& tau, const LinearMap& map) {
  require_trace_dim(map.rows(), tau);
  return TraceMap{map.transpose() * tau.coeffs};
}

namespace {

void compare_tables(Report& report, const ThreeNSLieAlgebra& first, const ThreeNSLieAlgebra& second) {
  const std::size_t d = first.dim();
  for (const auto& p : combinations(d, 2)) {
    for (Index k = 0; k < d; ++k) {
      report.check("curly_routes", {p[0], p[1], k}, second.basis_curly(p[0], p[1], k) - first.basis_curly(p[0], p[1], k));
    }
  }
  for (const auto& t : combinations(d, 3)) {
    report.check("skew_routes", {t[0], t[1], t[2]},
                 second.skew.basis_bracket(t[0], t[1], t[2]) - first.skew.basis_bracket(t[0], t[1], t[2]));
  }
}

}  // namespace

Report diagram_check(const LieTwistedOperator& op, const TraceMap& tau, const TraceMap& tau_prime) {
  require_trace_dim(op.space_dim(), tau_prime);
  const ThreeNSLieAlgebra route1 = from_twisted_ns(induced_twisted(op, tau));
  const NSLieAlgebra binary = ns_from_twisted_lie(op);
  Report report("diagram");
  if (!check_trace(binary, tau_prime).passed()) report.note("second form does not vanish on the star bracket of V");
  const ThreeNSLieAlgebra route2 = induce_3ns_unchecked(binary, tau_prime);
  compare_tables(report, route1, route2);
  return report;
}

Report diagram_check(const LieTwistedOperator& op, const TraceMap& tau) {
  op.require_shapes();
  return diagram_check(op, tau, pullback(tau, op.map));
}

Report diagram_discrepancy(const LieTwistedOperator& op, const TraceMap& tau, const TraceMap& tau_prime) {
  const ThreeNSLieAlgebra route1 = from_twisted_ns(induced_twisted(op, tau));
  const ThreeNSLieAlgebra route2 = induce_3ns_unchecked(ns_from_twisted_lie(op), tau_prime);
  const std::size_t m = op.space_dim();
  const Vec gap = tau_prime.coeffs - pullback(tau, op.map).coeffs;
  const Mat& t = op.map;
  Report report("diagram_discrepancy");
  for (const auto& p : combinations(m, 2)) {
    const Index u = p[0], v = p[1];
    for (Index w = 0; w < m; ++w) {
      Vec expected = gap[u] * op.rep.act(t.column(v)).column(w);
      expected.add_scaled(-gap[v], op.rep.act(t.column(u)).column(w));
      const Vec diff = route2.basis_curly(u, v, w) - route1.basis_curly(u, v, w);
      report.check("curly_discrepancy", {u, v, w}, diff - expected);
    }
  }
  for (const auto& q : combinations(m, 3)) {
    const Index u = q[0], v = q[1], w = q[2];
    Vec expected = gap[u] * op.cocycle.eval(t.column(v), t.column(w));
    expected.add_scaled(gap[v], op.cocycle.eval(t.column(w), t.column(u)));
    expected.add_scaled(gap[w], op.cocycle.eval(t.column(u), t.column(v)));
    const Vec diff = route2.skew.basis_bracket(u, v, w) - route1.skew.basis_bracket(u, v, w);
    report.check("skew_discrepancy", {u, v, w}, diff - expected);
  }
  return report;
}

LieTwistedOperator adjoint_context(const LieAlgebra& g, const TwoCocycleLie& theta, const LinearMap& map) {
  return LieTwistedOperator{g, adjoint(g), theta, map};
}

}  // namespace trilie
