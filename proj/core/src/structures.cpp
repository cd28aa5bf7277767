#include "trilie/structures.hpp"

#include "trilie/errors.hpp"

#include <string>

namespace trilie {

namespace {

Vec e(std::size_t n, Index i) { return Vec::unit(n, i); }

}  // namespace

Mat RepresentationLie::act(const Vec& x) const {
  Mat m(space_dim, space_dim);
  for (Index i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) m.add_scaled(x[i], ops[i]);
  }
  return m;
}

Vec bracket3(const ThreeLieAlgebra& g, const Vec& x, const Vec& y, const Vec& z) {
  if (x.size() != g.dim() || y.size() != g.dim() || z.size() != g.dim()) {
    throw ShapeMismatch("bracket3: argument length differs from algebra dimension");
  }
  return g.bracket(x, y, z);
}

Representation3 adjoint(const ThreeLieAlgebra& g) {
  const std::size_t n = g.dim();
  Representation3 rho(n, n);
  for (const auto& p : combinations(n, 2)) {
    Mat m(n, n);
    for (Index k = 0; k < n; ++k) m.set_column(k, g.basis_bracket(p[0], p[1], k));
    rho.set(p[0], p[1], m);
  }
  return rho;
}

RepresentationLie adjoint(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RepresentationLie rho(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index k = 0; k < n; ++k) rho.ops[i].set_column(k, g.basis_bracket(i, k));
  }
  return rho;
}

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

void require_shapes(const ThreeLieAlgebra& g, const Representation3& rho) {
  if (rho.algebra_dim() != g.dim()) throw ShapeMismatch("representation indexed by a different algebra dimension");
}

void require_shapes(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta) {
  require_shapes(g, rho);
  if (theta.algebra_dim() != g.dim() || theta.space_dim() != rho.space_dim) {
    throw ShapeMismatch("cocycle shape differs from (algebra, module)");
  }
}

void require_shapes(const LieAlgebra& g, const RepresentationLie& rho) {
  if (rho.algebra_dim() != g.dim()) throw ShapeMismatch("representation indexed by a different algebra dimension");
  for (const auto& m : rho.ops) {
    if (m.rows() != rho.space_dim || m.cols() != rho.space_dim) throw ShapeMismatch("representation matrix shape");
  }
}

void require_shapes(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta) {
  require_shapes(g, rho);
  if (theta.algebra_dim() != g.dim() || theta.space_dim() != rho.space_dim) {
    throw ShapeMismatch("cocycle shape differs from (algebra, module)");
  }
}

Report check_filippov(const ThreeLieAlgebra& g) {
  Report report("filippov");
  const std::size_t n = g.dim();
  for (const auto& a : combinations(n, 2)) {
    const Vec x1 = e(n, a[0]);
    const Vec x2 = e(n, a[1]);
    for (const auto& b : combinations(n, 3)) {
      const Vec x3 = e(n, b[0]);
      const Vec x4 = e(n, b[1]);
      const Vec x5 = e(n, b[2]);
      Vec r = g.bracket(x1, x2, g.basis_bracket(b[0], b[1], b[2]));
      r -= g.bracket(g.basis_bracket(a[0], a[1], b[0]), x4, x5);
      r -= g.bracket(x3, g.basis_bracket(a[0], a[1], b[1]), x5);
      r -= g.bracket(x3, x4, g.basis_bracket(a[0], a[1], b[2]));
      report.check("filippov", {a[0], a[1], b[0], b[1], b[2]}, r);
    }
  }
  return report;
}

Report check_jacobi(const LieAlgebra& g) {
  Report report("jacobi");
  const std::size_t n = g.dim();
  for (const auto& t : combinations(n, 3)) {
    const Vec x = e(n, t[0]);
    const Vec y = e(n, t[1]);
    const Vec z = e(n, t[2]);
    Vec r = g.bracket(x, g.basis_bracket(t[1], t[2]));
    r += g.bracket(y, g.basis_bracket(t[2], t[0]));
    r += g.bracket(z, g.basis_bracket(t[0], t[1]));
    report.check("jacobi", {t[0], t[1], t[2]}, r);
  }
  return report;
}

Report check_rep3(const ThreeLieAlgebra& g, const Representation3& rho) {
  require_shapes(g, rho);
  Report report("representation");
  const std::size_t n = g.dim();
  const auto& pairs = combinations(n, 2);
  // rho(x1,x2)rho(x3,x4) = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]) + rho(x3,x4)rho(x1,x2)
  for (const auto& a : pairs) {
    const Mat r12 = rho.basis_op(a[0], a[1]);
    for (const auto& b : pairs) {
      const Mat r34 = rho.basis_op(b[0], b[1]);
      Mat r = r12 * r34 - r34 * r12;
      r -= rho.act(g.basis_bracket(a[0], a[1], b[0]), e(n, b[1]));
      r -= rho.act(e(n, b[0]), g.basis_bracket(a[0], a[1], b[1]));
      report.check("rep_commutator", {a[0], a[1], b[0], b[1]}, flatten(r));
    }
  }
  // rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)
  for (const auto& t : combinations(n, 3)) {
    const Index i1 = t[0], i2 = t[1], i3 = t[2];
    for (Index i4 = 0; i4 < n; ++i4) {
      Mat r = rho.act(g.basis_bracket(i1, i2, i3), e(n, i4));
      r -= rho.basis_op(i1, i2) * rho.basis_op(i3, i4);
      r -= rho.basis_op(i2, i3) * rho.basis_op(i1, i4);
      r -= rho.basis_op(i3, i1) * rho.basis_op(i2, i4);
      report.check("rep_bracket", {i1, i2, i3, i4}, flatten(r));
    }
  }
  return report;
}

Report check_rep_lie(const LieAlgebra& g, const RepresentationLie& rho) {
  require_shapes(g, rho);
  Report report("representation_lie");
  const std::size_t n = g.dim();
  for (const auto& p : combinations(n, 2)) {
    Mat r = rho.act(g.basis_bracket(p[0], p[1]));
    r -= rho.ops[p[0]] * rho.ops[p[1]] - rho.ops[p[1]] * rho.ops[p[0]];
    report.check("rep_lie", {p[0], p[1]}, flatten(r));
  }
  return report;
}

Report check_cocycle3(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta) {
  require_shapes(g, rho, theta);
  Report report("cocycle");
  const std::size_t n = g.dim();
  for (const auto& a : combinations(n, 2)) {
    const Vec x1 = e(n, a[0]);
    const Vec x2 = e(n, a[1]);
    for (const auto& b : combinations(n, 3)) {
      const Vec y1 = e(n, b[0]);
      const Vec y2 = e(n, b[1]);
      const Vec y3 = e(n, b[2]);
      Vec r = theta.eval(x1, x2, g.basis_bracket(b[0], b[1], b[2]));
      r += rho.basis_op(a[0], a[1]) * theta.basis_value(b[0], b[1], b[2]);
      r -= theta.eval(g.basis_bracket(a[0], a[1], b[0]), y2, y3);
      r -= theta.eval(y1, g.basis_bracket(a[0], a[1], b[1]), y3);
      r -= theta.eval(y1, y2, g.basis_bracket(a[0], a[1], b[2]));
      r -= rho.basis_op(b[1], b[2]) * theta.basis_value(a[0], a[1], b[0]);
      r -= rho.basis_op(b[2], b[0]) * theta.basis_value(a[0], a[1], b[1]);
      r -= rho.basis_op(b[0], b[1]) * theta.basis_value(a[0], a[1], b[2]);
      report.check("cocycle", {a[0], a[1], b[0], b[1], b[2]}, r);
    }
  }
  return report;
}

Report check_cocycle_lie(const LieAlgebra& g, const RepresentationLie& rho, const TwoCocycleLie& theta) {
  require_shapes(g, rho, theta);
  Report report("cocycle_lie");
  const std::size_t n = g.dim();
  for (const auto& t : combinations(n, 3)) {
    const Index i = t[0], j = t[1], k = t[2];
    Vec r = rho.ops[i] * theta.basis_value(j, k);
    r += rho.ops[j] * theta.basis_value(k, i);
    r += rho.ops[k] * theta.basis_value(i, j);
    r += theta.eval(e(n, i), g.basis_bracket(j, k));
    r += theta.eval(e(n, j), g.basis_bracket(k, i));
    r += theta.eval(e(n, k), g.basis_bracket(i, j));
    report.check("cocycle_lie", {i, j, k}, r);
  }
  return report;
}

TwoCocycle3 coboundary(const ThreeLieAlgebra& g, const Representation3& rho, const LinearMap& theta1) {
  require_shapes(g, rho);
  if (theta1.rows() != rho.space_dim || theta1.cols() != g.dim()) throw ShapeMismatch("1-cochain shape");
  const std::size_t n = g.dim();
  TwoCocycle3 out(n, rho.space_dim);
  for (const auto& t : combinations(n, 3)) {
    const Index i = t[0], j = t[1], k = t[2];
    Vec v = rho.basis_op(i, j) * theta1.column(k);
    v += rho.basis_op(j, k) * theta1.column(i);
    v += rho.basis_op(k, i) * theta1.column(j);
    v -= theta1 * g.basis_bracket(i, j, k);
    out.set(i, j, k, v);
  }
  return out;
}

ThreeLieAlgebra semidirect_unchecked(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta) {
  require_shapes(g, rho, theta);
  const std::size_t n = g.dim();
  const std::size_t m = rho.space_dim;
  ThreeLieAlgebra out(n + m);
  auto embed = [&](const Vec& gx, const Vec& vu) {
    Vec r(n + m);
    for (std::size_t i = 0; i < n; ++i) r[i] = gx[i];
    for (std::size_t a = 0; a < m; ++a) r[n + a] = vu[a];
    return r;
  };
  for (const auto& t : combinations(n, 3)) {
    out.set(t[0], t[1], t[2], embed(g.basis_bracket(t[0], t[1], t[2]), theta.basis_value(t[0], t[1], t[2])));
  }
  // (x, y, w) with x<y in g and w in V: rho(x,y)w; fewer than two g-slots vanish.
  for (const auto& p : combinations(n, 2)) {
    const Mat r = rho.basis_op(p[0], p[1]);
    for (std::size_t a = 0; a < m; ++a) out.set(p[0], p[1], n + a, embed(Vec(n), r.column(a)));
  }
  return out;
}

ThreeLieAlgebra semidirect_twisted(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta) {
  require_shapes(g, rho, theta);
  if (!check_filippov(g).passed()) throw ValidationFailure("semidirect: algebra fails the Filippov identity");
  if (!check_rep3(g, rho).passed()) throw ValidationFailure("semidirect: rho is not a representation");
  if (!check_cocycle3(g, rho, theta).passed()) throw ValidationFailure("semidirect: theta is not a 2-cocycle");
  return semidirect_unchecked(g, rho, theta);
}

Report check_bracket_morphism(const ThreeLieAlgebra& src, const ThreeLieAlgebra& dst, const LinearMap& map) {
  if (map.cols() != src.dim() || map.rows() != dst.dim()) throw ShapeMismatch("morphism matrix shape");
  Report report("bracket_morphism");
  for (const auto& t : combinations(src.dim(), 3)) {
    Vec r = map * src.basis_bracket(t[0], t[1], t[2]);
    r -= dst.bracket(map.column(t[0]), map.column(t[1]), map.column(t[2]));
    report.check("bracket_morphism", {t[0], t[1], t[2]}, r);
  }
  return report;
}

LinearMap semidirect_shift_map(std::size_t algebra_dim, const LinearMap& theta1) {
  const std::size_t n = algebra_dim;
  const std::size_t m = theta1.rows();
  Mat psi = Mat::identity(n + m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) psi(n + a, i) = -theta1(a, i);
  return psi;
}

Report check_semidirect_iso(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta,
                            const LinearMap& theta1) {
  return check_semidirect_iso(g, rho, theta, theta1, semidirect_shift_map(g.dim(), theta1));
}

Report check_semidirect_iso(const ThreeLieAlgebra& g, const Representation3& rho, const TwoCocycle3& theta,
                            const LinearMap& theta1, const LinearMap& psi) {
  TwoCocycle3 shifted = theta;
  shifted.values += coboundary(g, rho, theta1).values;
  const ThreeLieAlgebra src = semidirect_unchecked(g, rho, theta);
  const ThreeLieAlgebra dst = semidirect_unchecked(g, rho, shifted);
  Report report = check_bracket_morphism(src, dst, psi);
  report.set_subject("semidirect_iso");
  return report;
}

}  // namespace trilie
