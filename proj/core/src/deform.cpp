#include "trilie/deform.hpp"

#include "trilie/cohomology.hpp"
#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

#include <algorithm>
#include <string>

namespace trilie {

namespace {

std::string at_degree(const char* name, std::size_t s) { return std::string(name) + "[t^" + std::to_string(s) + "]"; }

const LinearMap& coeff_or(const std::vector<LinearMap>& list, std::size_t i, const LinearMap& zero) {
  return i < list.size() ? list[i] : zero;
}

/// Columns T_i e_a for every term, T_0 included.
std::vector<std::vector<Vec>> term_columns(const DeformationFamily& fam) {
  std::vector<std::vector<Vec>> cols(fam.order() + 1);
  for (std::size_t i = 0; i <= fam.order(); ++i) {
    const LinearMap t = fam.term(i);
    for (std::size_t a = 0; a < t.cols(); ++a) cols[i].push_back(t.column(a));
  }
  return cols;
}

}  // namespace

LinearMap DeformationFamily::term(std::size_t i) const {
  if (i == 0) return base.map;
  if (i <= terms.size()) return terms[i - 1];
  return Mat(base.algebra_dim(), base.space_dim());
}

void DeformationFamily::require_shapes() const {
  base.require_shapes();
  for (const auto& t : terms) {
    if (t.rows() != base.algebra_dim() || t.cols() != base.space_dim()) {
      throw ShapeMismatch("deformation term must be dim g x dim V");
    }
  }
}

std::size_t max_order(std::size_t k) { return std::max(3 * (k + 1), 4 * k); }

namespace {

/// Degree-s coefficient residual on basis vectors u, v, w; cols[i][a] = T_i e_a.
Vec order_residual(const TwistedOperator& op, const std::vector<LinearMap>& maps,
                   const std::vector<std::vector<Vec>>& cols, std::size_t s, Index u, Index v, Index w) {
  const std::size_t k = maps.size() - 1;
  Vec lhs(op.algebra_dim());
  // inner[d] = sum_{i+j=d} rho-terms + sum_{i+j+q=d} theta-terms
  std::vector<Vec> inner(s + 1, Vec(op.space_dim()));
  for (std::size_t i = 0; i <= k && i <= s; ++i) {
    for (std::size_t j = 0; j <= k && i + j <= s; ++j) {
      const std::size_t l = s - i - j;
      if (l <= k) lhs += op.algebra.bracket(cols[i][u], cols[j][v], cols[l][w]);
      const std::size_t d = i + j;
      Vec r = op.rep.act(cols[i][u], cols[j][v]).column(w);
      r += op.rep.act(cols[i][v], cols[j][w]).column(u);
      r += op.rep.act(cols[i][w], cols[j][u]).column(v);
      inner[d] += r;
      for (std::size_t q = 0; q <= k && d + q <= s; ++q) {
        inner[d + q] += op.cocycle.eval(cols[i][u], cols[j][v], cols[q][w]);
      }
    }
  }
  for (std::size_t i = 0; i <= k && i <= s; ++i) lhs -= maps[i] * inner[s - i];
  return lhs;
}

}  // namespace

Report order_conditions(const DeformationFamily& fam, std::size_t s) {
  fam.require_shapes();
  const auto cols = term_columns(fam);
  std::vector<LinearMap> maps;
  for (std::size_t i = 0; i <= fam.order(); ++i) maps.push_back(fam.term(i));
  const std::string id = at_degree("order", s);
  Report report(id);
  for (const auto& t : combinations(fam.base.space_dim(), 3)) {
    report.check(id, {t[0], t[1], t[2]}, order_residual(fam.base, maps, cols, s, t[0], t[1], t[2]));
  }
  return report;
}

namespace {

struct PrintedTerms {
  const TwistedOperator& op;
  const LinearMap& t1;

  [[nodiscard]] Vec tc(Index a) const { return op.map.column(a); }
  [[nodiscard]] Vec t1c(Index a) const { return t1.column(a); }
  [[nodiscard]] Vec rho(const Vec& x, const Vec& y, Index a) const { return op.rep.act(x, y).column(a); }
  [[nodiscard]] Vec theta(const Vec& x, const Vec& y, const Vec& z) const { return op.cocycle.eval(x, y, z); }
  [[nodiscard]] Vec br(const Vec& x, const Vec& y, const Vec& z) const { return op.algebra.bracket(x, y, z); }

  /// rho(Tu,T1v)w + rho(T1u,Tv)w + rho(Tv,T1w)u + rho(T1v,Tw)u + rho(Tw,T1u)v
  /// + rho(T1w,Tu)v + theta(Tu,Tv,T1w) + theta(Tu,T1v,Tw) + theta(T1u,Tv,Tw)
  [[nodiscard]] Vec mixed_one(Index u, Index v, Index w) const {
    Vec r = rho(tc(u), t1c(v), w);
    r += rho(t1c(u), tc(v), w);
    r += rho(tc(v), t1c(w), u);
    r += rho(t1c(v), tc(w), u);
    r += rho(tc(w), t1c(u), v);
    r += rho(t1c(w), tc(u), v);
    r += theta(tc(u), tc(v), t1c(w));
    r += theta(tc(u), t1c(v), tc(w));
    r += theta(t1c(u), tc(v), tc(w));
    return r;
  }
  /// rho(T1u,T1v)w + rho(T1v,T1w)u + rho(T1w,T1u)v
  /// + theta(Tu,T1v,T1w) + theta(T1u,Tv,T1w) + theta(T1u,T1v,Tw)
  [[nodiscard]] Vec mixed_two(Index u, Index v, Index w) const {
    Vec r = rho(t1c(u), t1c(v), w);
    r += rho(t1c(v), t1c(w), u);
    r += rho(t1c(w), t1c(u), v);
    r += theta(tc(u), t1c(v), t1c(w));
    r += theta(t1c(u), tc(v), t1c(w));
    r += theta(t1c(u), t1c(v), tc(w));
    return r;
  }
  [[nodiscard]] Vec plain(Index u, Index v, Index w) const {
    Vec r = rho(tc(u), tc(v), w);
    r += rho(tc(v), tc(w), u);
    r += rho(tc(w), tc(u), v);
    r += theta(tc(u), tc(v), tc(w));
    return r;
  }

  [[nodiscard]] Vec eq1(Index u, Index v, Index w) const {
    Vec lhs = br(tc(u), tc(v), t1c(w)) + br(tc(u), t1c(v), tc(w)) + br(t1c(u), tc(v), tc(w));
    return lhs - op.map * mixed_one(u, v, w) - t1 * plain(u, v, w);
  }
  [[nodiscard]] Vec eq2(Index u, Index v, Index w) const {
    Vec lhs = br(tc(u), t1c(v), t1c(w)) + br(t1c(u), tc(v), t1c(w)) + br(t1c(u), t1c(v), tc(w));
    return lhs - op.map * mixed_two(u, v, w) - t1 * mixed_one(u, v, w);
  }
  [[nodiscard]] Vec eq3(Index u, Index v, Index w) const {
    Vec lhs = br(t1c(u), t1c(v), t1c(w));
    return lhs - op.map * theta(t1c(u), t1c(v), t1c(w)) - op.map * mixed_two(u, v, w);
  }
  [[nodiscard]] Vec eq4(Index u, Index v, Index w) const { return -(t1 * theta(t1c(u), t1c(v), t1c(w))); }

  [[nodiscard]] Vec eq(int which, Index u, Index v, Index w) const {
    switch (which) {
      case 1: return eq1(u, v, w);
      case 2: return eq2(u, v, w);
      case 3: return eq3(u, v, w);
      default: return eq4(u, v, w);
    }
  }
};

void require_term_shape(const TwistedOperator& base, const LinearMap& t1) {
  base.require_shapes();
  if (t1.rows() != base.algebra_dim() || t1.cols() != base.space_dim()) {
    throw ShapeMismatch("deformation term must be dim g x dim V");
  }
}

}  // namespace

Report printed_infinitesimal_conditions(const TwistedOperator& base, const LinearMap& t1) {
  require_term_shape(base, t1);
  const PrintedTerms p{base, t1};
  Report report("printed_infinitesimal");
  for (int which = 1; which <= 4; ++which) {
    const std::string id = "printed_" + std::to_string(which);
    for (const auto& t : combinations(base.space_dim(), 3)) report.check(id, {t[0], t[1], t[2]}, p.eq(which, t[0], t[1], t[2]));
  }
  return report;
}

Report infinitesimal_cross_check(const TwistedOperator& base, const LinearMap& t1) {
  require_term_shape(base, t1);
  const PrintedTerms p{base, t1};
  const DeformationFamily fam{base, {t1}};
  const auto cols = term_columns(fam);
  const std::vector<LinearMap> maps{base.map, t1};
  Report report("infinitesimal_cross_check");
  for (int which = 1; which <= 4; ++which) {
    const std::string id = "printed_vs_derived_" + std::to_string(which);
    for (const auto& t : combinations(base.space_dim(), 3)) {
      const Vec derived = order_residual(base, maps, cols, static_cast<std::size_t>(which), t[0], t[1], t[2]);
      report.check(id, {t[0], t[1], t[2]}, derived - p.eq(which, t[0], t[1], t[2]));
    }
  }
  return report;
}

Report infinitesimal_check(const TwistedOperator& base, const LinearMap& t1) {
  require_term_shape(base, t1);
  const DeformationFamily fam{base, {t1}};
  Report report("infinitesimal");
  for (std::size_t s = 1; s <= 4; ++s) report.merge(order_conditions(fam, s));
  const Report cross = infinitesimal_cross_check(base, t1);
  for (const auto& v : cross.violations()) {
    std::string text = v.identity + " differs at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) text += (i ? "," : "") + std::to_string(v.indices[i]);
    report.note(text + ")");
  }
  return report;
}

LinearMap one_cocycle_class(const TwistedOperator& base, const LinearMap& t1) {
  require_term_shape(base, t1);
  const Cochain c = Cochain::from_linear_map(t1);
  if (!twisted_diff_generic(base, c).is_zero()) throw ValidationFailure("class: T1 is not a 1-cocycle");
  const Mat d0 = twisted_differential_matrix(base, 0, 1);
  RowSpace b(d0.rows());
  for (std::size_t col = 0; col < d0.cols(); ++col) b.add(d0.column(col));
  return Cochain::from_coefficients(1, base.space_dim(), base.algebra_dim(), b.reduce(c.coefficients())).as_linear_map();
}

LinearMap ad_bivector(const ThreeLieAlgebra& g, const ZeroCochain& x) {
  const std::size_t n = g.dim();
  if (x.dim() != n) throw ShapeMismatch("bivector lives in a different algebra");
  Mat ad(n, n);
  for (const auto& p : combinations(n, 2)) {
    const Rational a = x.at(p[0], p[1]);
    if (a.is_zero()) continue;
    for (Index k = 0; k < n; ++k) ad.set_column(k, ad.column(k) + a * g.basis_bracket(p[0], p[1], k));
  }
  return ad;
}

LinearMap psi_linear_term(const TwistedOperator& op, const ZeroCochain& x) {
  op.require_shapes();
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  if (x.dim() != n) throw ShapeMismatch("bivector lives in a different algebra");
  Mat out(m, m);
  for (const auto& p : combinations(n, 2)) {
    const Rational a = x.at(p[0], p[1]);
    if (a.is_zero()) continue;
    const Vec ei = Vec::unit(n, p[0]);
    const Vec ej = Vec::unit(n, p[1]);
    const Mat r = op.rep.basis_op(p[0], p[1]);
    for (Index v = 0; v < m; ++v) {
      Vec c = r.column(v) + op.cocycle.eval(ei, ej, op.map.column(v));
      out.set_column(v, out.column(v) + a * c);
    }
  }
  return out;
}

Report morphism_coefficients(const DeformationFamily& fam, const DeformationFamily& fam2,
                             const std::vector<LinearMap>& phi, const std::vector<LinearMap>& psi,
                             std::size_t truncation) {
  fam.require_shapes();
  fam2.require_shapes();
  const TwistedOperator& op = fam.base;
  if (!(op.algebra == fam2.base.algebra && op.rep == fam2.base.rep && op.cocycle == fam2.base.cocycle)) {
    throw ValidationFailure("equivalence: families live in different contexts");
  }
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  const Mat zero_g(n, n);
  const Mat zero_v(m, m);
  for (const auto& p : phi) {
    if (p.rows() != n || p.cols() != n) throw ShapeMismatch("phi coefficient must be dim g x dim g");
  }
  for (const auto& p : psi) {
    if (p.rows() != m || p.cols() != m) throw ShapeMismatch("psi coefficient must be dim V x dim V");
  }
  const std::size_t p_phi = phi.empty() ? 0 : phi.size() - 1;
  const std::size_t p_psi = psi.empty() ? 0 : psi.size() - 1;

  Report report("equivalence");
  for (std::size_t s = 0; s <= truncation; ++s) {
    const std::string id_phi = at_degree("phi_morphism", s);
    for (const auto& t : combinations(n, 3)) {
      Vec r = coeff_or(phi, s, zero_g) * op.algebra.basis_bracket(t[0], t[1], t[2]);
      for (std::size_t a = 0; a <= std::min(s, p_phi); ++a) {
        for (std::size_t b = 0; a + b <= s && b <= p_phi; ++b) {
          const std::size_t c = s - a - b;
          if (c > p_phi) continue;
          r -= op.algebra.bracket(phi[a].column(t[0]), phi[b].column(t[1]), phi[c].column(t[2]));
        }
      }
      report.check(id_phi, {t[0], t[1], t[2]}, r);
    }

    const std::string id_rep = at_degree("rep_compat", s);
    for (const auto& pr : combinations(n, 2)) {
      Mat r = coeff_or(psi, s, zero_v) * op.rep.basis_op(pr[0], pr[1]);
      for (std::size_t a = 0; a <= std::min(s, p_phi); ++a) {
        for (std::size_t b = 0; a + b <= s && b <= p_phi; ++b) {
          const std::size_t c = s - a - b;
          if (c > p_psi) continue;
          r -= op.rep.act(phi[a].column(pr[0]), phi[b].column(pr[1])) * psi[c];
        }
      }
      report.check(id_rep, {pr[0], pr[1]}, flatten(r));
    }

    const std::string id_coc = at_degree("cocycle_compat", s);
    for (const auto& t : combinations(n, 3)) {
      Vec r = coeff_or(psi, s, zero_v) * op.cocycle.basis_value(t[0], t[1], t[2]);
      for (std::size_t a = 0; a <= std::min(s, p_phi); ++a) {
        for (std::size_t b = 0; a + b <= s && b <= p_phi; ++b) {
          const std::size_t c = s - a - b;
          if (c > p_phi) continue;
          r -= op.cocycle.eval(phi[a].column(t[0]), phi[b].column(t[1]), phi[c].column(t[2]));
        }
      }
      report.check(id_coc, {t[0], t[1], t[2]}, r);
    }

    const std::string id_op = at_degree("operator_compat", s);
    Mat diff(n, m);
    for (std::size_t a = 0; a <= s; ++a) {
      if (a <= p_phi) diff += phi[a] * fam.term(s - a);
      if (s - a <= p_psi) diff -= fam2.term(a) * psi[s - a];
    }
    for (Index u = 0; u < m; ++u) report.check(id_op, {u}, diff.column(u));
  }
  return report;
}

Report printed_equivalence_conditions(const TwistedOperator& base, const LinearMap& t1, const LinearMap& t1_prime,
                                      const ZeroCochain& x) {
  require_term_shape(base, t1);
  require_term_shape(base, t1_prime);
  const std::size_t n = base.algebra_dim();
  const std::size_t m = base.space_dim();
  const LinearMap ad = ad_bivector(base.algebra, x);
  const LinearMap psi1 = psi_linear_term(base, x);
  const auto& g = base.algebra;
  const auto& rho = base.rep;
  const auto& theta = base.cocycle;
  // theta(X, y)
  auto theta_x = [&](const Vec& y) {
    Vec r(m);
    for (const auto& p : combinations(n, 2)) {
      const Rational a = x.at(p[0], p[1]);
      if (!a.is_zero()) r.add_scaled(a, theta.eval(Vec::unit(n, p[0]), Vec::unit(n, p[1]), y));
    }
    return r;
  };
  Mat rho_x(m, m);
  for (const auto& p : combinations(n, 2)) rho_x.add_scaled(x.at(p[0], p[1]), rho.basis_op(p[0], p[1]));

  Report report("printed_equivalence");
  for (const auto& t : combinations(n, 3)) {
    const Vec z1 = Vec::unit(n, t[0]), z2 = Vec::unit(n, t[1]), z3 = Vec::unit(n, t[2]);
    const Vec a1 = ad * z1, a2 = ad * z2, a3 = ad * z3;
    const std::vector<std::size_t> idx{t[0], t[1], t[2]};
    report.check("printed_phi_t2", idx, g.bracket(z1, a2, a3) + g.bracket(a1, z2, a3) + g.bracket(a1, a2, z3));
    report.check("printed_phi_t3", idx, g.bracket(a1, a2, a3));
    const Vec th = theta.eval(z1, z2, z3);
    Vec c1 = rho_x * th + theta_x(base.map * th);
    c1 -= theta.eval(a1, z2, z3) + theta.eval(z1, a2, z3) + theta.eval(z1, z2, a3);
    report.check("printed_cocycle_t1", idx, c1);
    report.check("printed_cocycle_t2", idx, theta.eval(z1, a2, a3) + theta.eval(a1, z2, a3) + theta.eval(a1, a2, z3));
    report.check("printed_cocycle_t3", idx, theta.eval(a1, a2, a3));
  }
  for (const auto& pr : combinations(n, 2)) {
    const Vec z1 = Vec::unit(n, pr[0]), z2 = Vec::unit(n, pr[1]);
    const Vec a1 = ad * z1, a2 = ad * z2;
    const Mat r12 = rho.basis_op(pr[0], pr[1]);
    const Mat mixed = rho.act(z1, a2) + rho.act(a1, z2);
    const Mat both = rho.act(a1, a2);
    for (Index u = 0; u < m; ++u) {
      const std::vector<std::size_t> idx{pr[0], pr[1], u};
      const Vec tu = base.map.column(u);
      report.check("printed_rep_t1", idx, theta_x(base.map * r12.column(u)) - r12 * theta_x(tu));
      report.check("printed_rep_t2", idx, mixed * psi1.column(u) + both.column(u));
      report.check("printed_rep_t3", idx, both * psi1.column(u));
    }
  }
  for (Index u = 0; u < m; ++u) {
    const Vec tu = base.map.column(u);
    report.check("printed_operator_t1", {u},
                 t1.column(u) + ad * tu - base.map * psi1.column(u) - t1_prime.column(u));
    report.check("printed_operator_t2", {u}, ad * t1.column(u) - t1_prime * psi1.column(u));
  }
  return report;
}

Report equivalence_check_infinitesimal(const TwistedOperator& base, const LinearMap& t1, const LinearMap& t1_prime,
                                       const ZeroCochain& x) {
  const DeformationFamily fam{base, {t1}};
  const DeformationFamily fam2{base, {t1_prime}};
  const std::vector<LinearMap> phi{Mat::identity(base.algebra_dim()), ad_bivector(base.algebra, x)};
  const std::vector<LinearMap> psi{Mat::identity(base.space_dim()), psi_linear_term(base, x)};
  Report report = morphism_coefficients(fam, fam2, phi, psi, 3);
  report.set_subject("equivalence_infinitesimal");
  report.merge(printed_equivalence_conditions(base, t1, t1_prime, x));
  if (report.passed()) {
    const Mat rel = (t1 - t1_prime) - delta_unchecked(base, x).as_linear_map();
    for (Index u = 0; u < base.space_dim(); ++u) report.check("class_relation", {u}, rel.column(u));
  }
  return report;
}

FormalResult formal_check(const DeformationFamily& fam) {
  fam.require_shapes();
  FormalResult res;
  res.report.set_subject("formal");
  const std::size_t k = fam.order();
  for (std::size_t s = 0; s <= max_order(k); ++s) res.report.merge(order_conditions(fam, s));

  const TwistedOperator& op = fam.base;
  const std::size_t m = op.space_dim();
  const auto cols = term_columns(fam);
  const std::size_t top = 3 * k;
  res.brackets.assign(top + 1, ThreeLieAlgebra(m));
  for (const auto& t : combinations(m, 3)) {
    const Index u = t[0], v = t[1], w = t[2];
    std::vector<Vec> coeff(top + 1, Vec(m));
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j <= k; ++j) {
        Vec r = op.rep.act(cols[i][u], cols[j][v]).column(w);
        r += op.rep.act(cols[i][v], cols[j][w]).column(u);
        r += op.rep.act(cols[i][w], cols[j][u]).column(v);
        coeff[i + j] += r;
        for (std::size_t l = 0; l <= k; ++l) coeff[i + j + l] += op.cocycle.eval(cols[i][u], cols[j][v], cols[l][w]);
      }
    }
    for (std::size_t d = 0; d <= top; ++d) res.brackets[d].set(u, v, w, coeff[d]);
  }

  res.bracket_report.set_subject("deformed_bracket");
  const auto& br = res.brackets;
  for (std::size_t s = 0; s <= 2 * top; ++s) {
    const std::string id = at_degree("filippov", s);
    for (const auto& a : combinations(m, 2)) {
      for (const auto& b : combinations(m, 3)) {
        Vec r(m);
        for (std::size_t p = 0; p <= std::min(s, top); ++p) {
          const std::size_t q = s - p;
          if (q > top) continue;
          const ThreeLieAlgebra& outer = br[p];
          const ThreeLieAlgebra& inner = br[q];
          const Vec x1 = Vec::unit(m, a[0]), x2 = Vec::unit(m, a[1]);
          const Vec x3 = Vec::unit(m, b[0]), x4 = Vec::unit(m, b[1]), x5 = Vec::unit(m, b[2]);
          r += outer.bracket(x1, x2, inner.basis_bracket(b[0], b[1], b[2]));
          r -= outer.bracket(inner.basis_bracket(a[0], a[1], b[0]), x4, x5);
          r -= outer.bracket(x3, inner.basis_bracket(a[0], a[1], b[1]), x5);
          r -= outer.bracket(x3, x4, inner.basis_bracket(a[0], a[1], b[2]));
        }
        res.bracket_report.check(id, {a[0], a[1], b[0], b[1], b[2]}, r);
      }
    }
  }
  return res;
}

std::size_t default_equivalence_truncation(const DeformationFamily& fam, const DeformationFamily& fam2,
                                           const EquivalencePair& pair) {
  const std::size_t k = std::max(fam.order(), fam2.order());
  const std::size_t p = 1 + std::max(pair.higher_phi.size(), pair.higher_psi.size());
  return std::max({3 * (k + 1), 3 * p, p + k});
}

Report equivalence_check_formal(const DeformationFamily& fam, const DeformationFamily& fam2, const EquivalencePair& pair,
                                std::optional<std::size_t> truncation) {
  fam.require_shapes();
  fam2.require_shapes();
  if (!(fam.base == fam2.base)) throw ValidationFailure("equivalence: families deform different operators");
  const TwistedOperator& base = fam.base;
  std::vector<LinearMap> phi{Mat::identity(base.algebra_dim()), ad_bivector(base.algebra, pair.x)};
  std::vector<LinearMap> psi{Mat::identity(base.space_dim()), psi_linear_term(base, pair.x)};
  phi.insert(phi.end(), pair.higher_phi.begin(), pair.higher_phi.end());
  psi.insert(psi.end(), pair.higher_psi.begin(), pair.higher_psi.end());
  const std::size_t trunc = truncation.value_or(default_equivalence_truncation(fam, fam2, pair));
  Report report = morphism_coefficients(fam, fam2, phi, psi, trunc);
  report.set_subject("equivalence_formal");
  if (report.passed() && trunc >= 1) {
    const Mat rel = (fam.term(1) - fam2.term(1)) - delta_unchecked(base, pair.x).as_linear_map();
    for (Index u = 0; u < base.space_dim(); ++u) report.check("class_relation", {u}, rel.column(u));
  }
  return report;
}

}  // namespace trilie
