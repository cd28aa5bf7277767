#include "trilie/twistop.hpp"

#include "trilie/cochain.hpp"
#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

namespace trilie {

void TwistedOperator::require_shapes() const {
  trilie::require_shapes(algebra, rep, cocycle);
  if (map.rows() != algebra.dim() || map.cols() != rep.space_dim) {
    throw ShapeMismatch("twisted operator: map must be dim g x dim V");
  }
}

Vec induced_value(const TwistedOperator& op, const Vec& u, const Vec& v, const Vec& w) {
  const Vec tu = op.map * u;
  const Vec tv = op.map * v;
  const Vec tw = op.map * w;
  Vec r = op.rep.apply(tu, tv, w);
  r += op.rep.apply(tv, tw, u);
  r += op.rep.apply(tw, tu, v);
  r += op.cocycle.eval(tu, tv, tw);
  return r;
}

Report check_twisted(const TwistedOperator& op) {
  op.require_shapes();
  Report report("twisted");
  const std::size_t m = op.space_dim();
  for (const auto& t : combinations(m, 3)) {
    const Vec u = Vec::unit(m, t[0]);
    const Vec v = Vec::unit(m, t[1]);
    const Vec w = Vec::unit(m, t[2]);
    Vec r = op.algebra.bracket(op.map.column(t[0]), op.map.column(t[1]), op.map.column(t[2]));
    r -= op.map * induced_value(op, u, v, w);
    report.check("twisted", {t[0], t[1], t[2]}, r);
  }
  return report;
}

Report check_graph_subalgebra(const TwistedOperator& op) {
  op.require_shapes();
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  const ThreeLieAlgebra big = semidirect_unchecked(op.algebra, op.rep, op.cocycle);
  auto graph = [&](Index a) {
    Vec r(n + m);
    for (std::size_t i = 0; i < n; ++i) r[i] = op.map(i, a);
    r[n + a] = 1;
    return r;
  };
  Report report("graph_subalgebra");
  for (const auto& t : combinations(m, 3)) {
    const Vec b = big.bracket(graph(t[0]), graph(t[1]), graph(t[2]));
    Vec gpart(n), vpart(m);
    for (std::size_t i = 0; i < n; ++i) gpart[i] = b[i];
    for (std::size_t a = 0; a < m; ++a) vpart[a] = b[n + a];
    report.check("graph", {t[0], t[1], t[2]}, gpart - op.map * vpart);
  }
  return report;
}

ThreeLieAlgebra induced_bracket_unchecked(const TwistedOperator& op) {
  op.require_shapes();
  const std::size_t m = op.space_dim();
  ThreeLieAlgebra out(m);
  for (const auto& t : combinations(m, 3)) {
    out.set(t[0], t[1], t[2], induced_value(op, Vec::unit(m, t[0]), Vec::unit(m, t[1]), Vec::unit(m, t[2])));
  }
  return out;
}

ThreeLieAlgebra induced_bracket(const TwistedOperator& op) {
  if (!check_twisted(op).passed()) throw ValidationFailure("induced bracket: operator is not twisted");
  ThreeLieAlgebra out = induced_bracket_unchecked(op);
  if (!check_bracket_morphism(out, op.algebra, op.map).passed()) {
    throw ValidationFailure("induced bracket: T is not a bracket morphism");
  }
  return out;
}

Report check_twisted_morphism(const TwistedMorphism& mor, const TwistedOperator& src, const TwistedOperator& dst) {
  src.require_shapes();
  dst.require_shapes();
  const std::size_t n = src.algebra_dim();
  const std::size_t m = src.space_dim();
  if (mor.phi.rows() != dst.algebra_dim() || mor.phi.cols() != n || mor.psi.rows() != dst.space_dim() ||
      mor.psi.cols() != m) {
    throw ShapeMismatch("twisted morphism: phi/psi shapes");
  }
  Report report("twisted_morphism");
  report.merge(check_bracket_morphism(src.algebra, dst.algebra, mor.phi));
  for (const auto& p : combinations(n, 2)) {
    Mat r = mor.psi * src.rep.basis_op(p[0], p[1]);
    r -= dst.rep.act(mor.phi.column(p[0]), mor.phi.column(p[1])) * mor.psi;
    report.check("rep_compat", {p[0], p[1]}, flatten(r));
  }
  for (const auto& t : combinations(n, 3)) {
    Vec r = mor.psi * src.cocycle.basis_value(t[0], t[1], t[2]);
    r -= dst.cocycle.eval(mor.phi.column(t[0]), mor.phi.column(t[1]), mor.phi.column(t[2]));
    report.check("cocycle_compat", {t[0], t[1], t[2]}, r);
  }
  const Mat diff = mor.phi * src.map - dst.map * mor.psi;
  for (std::size_t a = 0; a < m; ++a) report.check("operator_compat", {a}, diff.column(a));
  return report;
}

TwistedOperator coboundary_shift(const TwistedOperator& op, const LinearMap& theta1) {
  op.require_shapes();
  if (theta1.rows() != op.space_dim() || theta1.cols() != op.algebra_dim()) throw ShapeMismatch("1-cochain shape");
  const auto inv = try_inverse(Mat::identity(op.space_dim()) - theta1 * op.map);
  if (!inv) throw NotInvertible("Id - theta T is singular");
  TwistedOperator out = op;
  out.cocycle.values += coboundary(op.algebra, op.rep, theta1).values;
  out.map = op.map * *inv;
  return out;
}

bool check_admissible(const TwistedOperator& op, const LinearMap& theta1) {
  op.require_shapes();
  if (theta1.rows() != op.space_dim() || theta1.cols() != op.algebra_dim()) throw ShapeMismatch("1-cochain shape");
  if (!coboundary(op.algebra, op.rep, theta1).values.is_zero()) {
    throw ValidationFailure("admissibility: theta is not a 1-cocycle");
  }
  return try_inverse(Mat::identity(op.space_dim()) + theta1 * op.map).has_value();
}

TwistedOperator gauge_transform(const TwistedOperator& op, const LinearMap& theta1) {
  if (!check_admissible(op, theta1)) throw NotAdmissible("Id + theta T is singular");
  const Mat a = Mat::identity(op.space_dim()) + theta1 * op.map;
  TwistedOperator out = op;
  out.map = op.map * inverse(a);
  const Report iso = check_bracket_morphism(induced_bracket_unchecked(op), induced_bracket_unchecked(out), a);
  if (!iso.passed()) throw ValidationFailure("gauge transform: Id + theta T does not intertwine the brackets");
  return out;
}

TwistedOperator inverse_cochain_operator(const ThreeLieAlgebra& g, const Representation3& rho, const LinearMap& theta0) {
  require_shapes(g, rho);
  if (theta0.rows() != rho.space_dim || theta0.cols() != g.dim()) throw ShapeMismatch("1-cochain shape");
  const auto inv = try_inverse(theta0);
  if (!inv) throw NotInvertible("theta0 is singular");
  TwistedOperator op{g, rho, coboundary(g, rho, theta0), *inv};
  op.cocycle.values *= Rational(-1);
  return op;
}

namespace {

/// [Nx,y,z] + [x,Ny,z] + [x,y,Nz] on basis vectors.
Vec one_n_sum(const ThreeLieAlgebra& g, const LinearMap& n, Index i, Index j, Index k) {
  const std::size_t d = g.dim();
  const Vec x = Vec::unit(d, i), y = Vec::unit(d, j), z = Vec::unit(d, k);
  Vec r = g.bracket(n.column(i), y, z);
  r += g.bracket(x, n.column(j), z);
  r += g.bracket(x, y, n.column(k));
  return r;
}

/// [Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz] on basis vectors.
Vec two_n_sum(const ThreeLieAlgebra& g, const LinearMap& n, Index i, Index j, Index k) {
  const std::size_t d = g.dim();
  const Vec x = Vec::unit(d, i), y = Vec::unit(d, j), z = Vec::unit(d, k);
  Vec r = g.bracket(n.column(i), n.column(j), z);
  r += g.bracket(n.column(i), y, n.column(k));
  r += g.bracket(x, n.column(j), n.column(k));
  return r;
}

void require_endomorphism(const ThreeLieAlgebra& g, const LinearMap& n) {
  if (n.rows() != g.dim() || n.cols() != g.dim()) throw ShapeMismatch("Nijenhuis operator must be dim g x dim g");
}

}  // namespace

Report nijenhuis_check(const ThreeLieAlgebra& g, const LinearMap& n) {
  require_endomorphism(g, n);
  Report report("nijenhuis");
  for (const auto& t : combinations(g.dim(), 3)) {
    const Index i = t[0], j = t[1], k = t[2];
    Vec inner = two_n_sum(g, n, i, j, k);
    inner -= n * one_n_sum(g, n, i, j, k);
    inner += n * (n * g.basis_bracket(i, j, k));
    Vec r = g.bracket(n.column(i), n.column(j), n.column(k));
    r -= n * inner;
    report.check("nijenhuis", {i, j, k}, r);
  }
  return report;
}

ThreeLieAlgebra nijenhuis_deformed(const ThreeLieAlgebra& g, const LinearMap& n) {
  require_endomorphism(g, n);
  ThreeLieAlgebra out(g.dim());
  for (const auto& t : combinations(g.dim(), 3)) {
    const Index i = t[0], j = t[1], k = t[2];
    Vec r = two_n_sum(g, n, i, j, k);
    r -= n * (one_n_sum(g, n, i, j, k) - n * g.basis_bracket(i, j, k));
    out.set(i, j, k, r);
  }
  return out;
}

Representation3 nijenhuis_rep(const ThreeLieAlgebra& g, const LinearMap& n) {
  require_endomorphism(g, n);
  const std::size_t d = g.dim();
  Representation3 rho(d, d);
  for (const auto& p : combinations(d, 2)) {
    Mat m(d, d);
    for (Index k = 0; k < d; ++k) m.set_column(k, g.bracket(n.column(p[0]), n.column(p[1]), Vec::unit(d, k)));
    rho.set(p[0], p[1], m);
  }
  return rho;
}

TwoCocycle3 nijenhuis_cocycle(const ThreeLieAlgebra& g, const LinearMap& n) {
  require_endomorphism(g, n);
  TwoCocycle3 theta(g.dim(), g.dim());
  for (const auto& t : combinations(g.dim(), 3)) {
    const Index i = t[0], j = t[1], k = t[2];
    theta.set(i, j, k, -(n * (one_n_sum(g, n, i, j, k) - n * g.basis_bracket(i, j, k))));
  }
  return theta;
}

bool NijenhuisPackage::valid() const {
  for (const auto& r : validation) {
    if (!r.passed()) return false;
  }
  return true;
}

NijenhuisPackage nijenhuis_package(const ThreeLieAlgebra& g, const LinearMap& n) {
  if (!nijenhuis_check(g, n).passed()) throw NotNijenhuis("operator fails the Nijenhuis identity");
  NijenhuisPackage pkg;
  pkg.deformed = nijenhuis_deformed(g, n);
  pkg.rep = nijenhuis_rep(g, n);
  pkg.cocycle = nijenhuis_cocycle(g, n);
  pkg.identity = TwistedOperator{pkg.deformed, pkg.rep, pkg.cocycle, Mat::identity(g.dim())};
  pkg.validation = {check_filippov(pkg.deformed), check_rep3(pkg.deformed, pkg.rep),
                    check_cocycle3(pkg.deformed, pkg.rep, pkg.cocycle), check_twisted(pkg.identity)};
  return pkg;
}

}  // namespace trilie
