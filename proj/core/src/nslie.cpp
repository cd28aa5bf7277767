#include "trilie/nslie.hpp"

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

namespace trilie {

Vec ThreeNSLieAlgebra::cyclic_curly(const Vec& x, const Vec& y, const Vec& z) const {
  Vec r = curly_value(x, y, z);
  r += curly_value(y, z, x);
  r += curly_value(z, x, y);
  return r;
}

Vec ThreeNSLieAlgebra::star(const Vec& x, const Vec& y, const Vec& z) const {
  return cyclic_curly(x, y, z) + skew_value(x, y, z);
}

void ThreeNSLieAlgebra::set_curly(Index i, Index j, Index k, const Vec& value) {
  if (i == j) throw ShapeMismatch("curly product is skew in its first two slots");
  Mat op = curly.basis_op(i, j);
  op.set_column(k, value);
  curly.set(i, j, op);
}

Vec NSLieAlgebra::star(const Vec& x, const Vec& y) const {
  return curly_value(x, y) - curly_value(y, x) + skew_value(x, y);
}

Report check_3ns(const ThreeNSLieAlgebra& a) {
  const std::size_t d = a.dim();
  if (a.curly.algebra_dim() != d || a.curly.space_dim != d) throw ShapeMismatch("3-NS-Lie tables of different sizes");
  Report report("3ns");
  std::vector<Vec> e;
  for (Index i = 0; i < d; ++i) e.push_back(Vec::unit(d, i));

  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < d; ++k) {
        report.check("curly_skew", {i, j, k}, a.basis_curly(i, j, k) + a.basis_curly(j, i, k));
        report.check("skew_alternating", {i, j, k}, a.skew.basis_bracket(i, j, k) + a.skew.basis_bracket(j, i, k));
        report.check("skew_alternating", {i, j, k}, a.skew.basis_bracket(i, j, k) + a.skew.basis_bracket(i, k, j));
      }
    }
  }

  auto cu = [&](const Vec& x, const Vec& y, const Vec& z) { return a.curly_value(x, y, z); };
  auto sk = [&](const Vec& x, const Vec& y, const Vec& z) { return a.skew_value(x, y, z); };
  auto cyc = [&](const Vec& x, const Vec& y, const Vec& z) { return a.cyclic_curly(x, y, z); };
  auto st = [&](const Vec& x, const Vec& y, const Vec& z) { return a.star(x, y, z); };

  std::vector<std::size_t> idx(5, 0);
  const std::size_t total = d * d * d * d * d;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t p = 5; p-- > 0;) {
      idx[p] = c % d;
      c /= d;
    }
    const Vec& x1 = e[idx[0]];
    const Vec& x2 = e[idx[1]];
    const Vec& x3 = e[idx[2]];
    const Vec& x4 = e[idx[3]];
    const Vec& x5 = e[idx[4]];

    const Vec s123 = sk(x1, x2, x3);
    const Vec s124 = sk(x1, x2, x4);
    const Vec s125 = sk(x1, x2, x5);

    Vec left = cu(x1, x2, cu(x3, x4, x5));
    left -= cu(cyc(x1, x2, x3), x4, x5);
    left -= cu(s123, x4, x5);
    left -= cu(x3, cyc(x1, x2, x4), x5);
    left -= cu(x3, s124, x5);
    left -= cu(x3, x4, cu(x1, x2, x5));
    report.check("curly_left", idx, left);

    Vec cyclic = cu(cyc(x1, x2, x3), x4, x5);
    cyclic += cu(s123, x4, x5);
    cyclic -= cu(x1, x2, cu(x3, x4, x5));
    cyclic -= cu(x2, x3, cu(x1, x4, x5));
    cyclic -= cu(x3, x1, cu(x2, x4, x5));
    report.check("curly_cyclic", idx, cyclic);

    Vec compat = sk(x1, x2, st(x3, x4, x5));
    compat += cu(x1, x2, sk(x3, x4, x5));
    compat -= sk(st(x1, x2, x3), x4, x5);
    compat -= sk(x3, st(x1, x2, x4), x5);
    compat -= sk(x3, x4, st(x1, x2, x5));
    compat -= cu(x4, x5, s123);
    compat -= cu(x5, x3, s124);
    compat -= cu(x3, x4, s125);
    report.check("skew_compat", idx, compat);
  }
  return report;
}

ThreeLieAlgebra star_bracket(const ThreeNSLieAlgebra& a) {
  const std::size_t d = a.dim();
  ThreeLieAlgebra out(d);
  for (const auto& t : combinations(d, 3)) {
    out.set(t[0], t[1], t[2], a.star(Vec::unit(d, t[0]), Vec::unit(d, t[1]), Vec::unit(d, t[2])));
  }
  return out;
}

ThreeLieAlgebra subadjacent(const ThreeNSLieAlgebra& a) {
  if (!check_3ns(a).passed()) throw ValidationFailure("subadjacent: not a 3-NS-Lie algebra");
  return star_bracket(a);
}

ThreeNSLieAlgebra from_nijenhuis_ns(const ThreeLieAlgebra& g, const LinearMap& n) {
  if (!nijenhuis_check(g, n).passed()) throw NotNijenhuis("operator fails the Nijenhuis identity");
  const std::size_t d = g.dim();
  ThreeNSLieAlgebra out(d);
  for (const auto& p : combinations(d, 2)) {
    Mat op(d, d);
    for (Index k = 0; k < d; ++k) op.set_column(k, g.bracket(n.column(p[0]), n.column(p[1]), Vec::unit(d, k)));
    out.curly.set(p[0], p[1], op);
  }
  for (const auto& t : combinations(d, 3)) {
    const Vec x = Vec::unit(d, t[0]), y = Vec::unit(d, t[1]), z = Vec::unit(d, t[2]);
    Vec inner = g.bracket(n.column(t[0]), y, z);
    inner += g.bracket(x, n.column(t[1]), z);
    inner += g.bracket(x, y, n.column(t[2]));
    inner -= n * g.basis_bracket(t[0], t[1], t[2]);
    out.skew.set(t[0], t[1], t[2], -(n * inner));
  }
  return out;
}

LeftMultiplication left_mult_package(const ThreeNSLieAlgebra& a) {
  LeftMultiplication pkg;
  pkg.algebra = subadjacent(a);
  pkg.rep = a.curly;
  pkg.cocycle.values = a.skew.table;
  pkg.identity = TwistedOperator{pkg.algebra, pkg.rep, pkg.cocycle, Mat::identity(a.dim())};
  pkg.rep_report = check_rep3(pkg.algebra, pkg.rep);
  pkg.cocycle_report = check_cocycle3(pkg.algebra, pkg.rep, pkg.cocycle);
  pkg.twisted_report = check_twisted(pkg.identity);
  return pkg;
}

ThreeNSLieAlgebra from_twisted_ns(const TwistedOperator& op) {
  if (!check_twisted(op).passed()) throw ValidationFailure("operator is not twisted");
  const std::size_t m = op.space_dim();
  const Mat& t = op.map;
  ThreeNSLieAlgebra out(m);
  for (const auto& p : combinations(m, 2)) out.curly.set(p[0], p[1], op.rep.act(t.column(p[0]), t.column(p[1])));
  for (const auto& q : combinations(m, 3)) {
    out.skew.set(q[0], q[1], q[2], op.cocycle.eval(t.column(q[0]), t.column(q[1]), t.column(q[2])));
  }
  return out;
}

ThreeNSLieAlgebra compatible_from_invertible(const TwistedOperator& op) {
  op.require_shapes();
  const auto inv = try_inverse(op.map);
  if (!inv) throw NotInvertible("operator is not invertible");
  if (!check_twisted(op).passed()) throw ValidationFailure("operator is not twisted");
  const std::size_t d = op.algebra_dim();
  ThreeNSLieAlgebra out(d);
  for (const auto& p : combinations(d, 2)) out.curly.set(p[0], p[1], op.map * op.rep.basis_op(p[0], p[1]) * *inv);
  for (const auto& q : combinations(d, 3)) {
    out.skew.set(q[0], q[1], q[2], op.map * op.cocycle.basis_value(q[0], q[1], q[2]));
  }
  return out;
}

LieAlgebra star_bracket(const NSLieAlgebra& a) {
  const std::size_t d = a.dim();
  LieAlgebra out(d);
  for (const auto& p : combinations(d, 2)) out.set(p[0], p[1], a.star(Vec::unit(d, p[0]), Vec::unit(d, p[1])));
  return out;
}

Report check_ns_binary(const NSLieAlgebra& a) {
  const std::size_t d = a.dim();
  if (a.curly.algebra_dim() != d || a.curly.space_dim != d) throw ShapeMismatch("NS-Lie tables of different sizes");
  Report report("ns");
  auto cu = [&](const Vec& x, const Vec& y) { return a.curly_value(x, y); };
  auto sk = [&](const Vec& x, const Vec& y) { return a.skew_value(x, y); };
  auto st = [&](const Vec& x, const Vec& y) { return a.star(x, y); };
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < d; ++k) {
        const Vec x = Vec::unit(d, i), y = Vec::unit(d, j), z = Vec::unit(d, k);
        Vec left = cu(cu(x, y), z) - cu(x, cu(y, z)) - cu(cu(y, x), z) + cu(y, cu(x, z)) + cu(sk(x, y), z);
        report.check("ns_left", {i, j, k}, left);
        Vec skew = sk(x, st(y, z)) + sk(y, st(z, x)) + sk(z, st(x, y));
        skew += cu(x, sk(y, z)) + cu(y, sk(z, x)) + cu(z, sk(x, y));
        report.check("ns_skew", {i, j, k}, skew);
      }
    }
  }
  report.merge(check_jacobi(star_bracket(a)), "star");
  return report;
}

}  // namespace trilie
