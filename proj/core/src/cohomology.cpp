#include "trilie/cohomology.hpp"

#include "trilie/errors.hpp"
#include "trilie/linalg.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace trilie {

Vec rho_theta(const TwistedOperator& op, const Vec& u, const Vec& v, const Vec& x) {
  const Vec tu = op.map * u;
  const Vec tv = op.map * v;
  Vec inner = op.rep.apply(tv, x, u);
  inner += op.rep.apply(x, tu, v);
  inner += op.cocycle.eval(x, tu, tv);
  return op.algebra.bracket(tu, tv, x) - op.map * inner;
}

Representation3 rho_theta_rep(const TwistedOperator& op) {
  op.require_shapes();
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  Representation3 out(m, n);
  for (const auto& p : combinations(m, 2)) {
    Mat a(n, n);
    for (Index k = 0; k < n; ++k) a.set_column(k, rho_theta(op, Vec::unit(m, p[0]), Vec::unit(m, p[1]), Vec::unit(n, k)));
    out.set(p[0], p[1], a);
  }
  return out;
}

namespace {

void require_twisted_cochain(const TwistedOperator& op, const Cochain& f) {
  op.require_shapes();
  if (f.source_dim() != op.space_dim() || f.target_dim() != op.algebra_dim()) {
    throw ShapeMismatch("twisted cochain must map V-arguments to g");
  }
}

}  // namespace

Cochain twisted_diff_generic(const TwistedOperator& op, const Cochain& f) {
  require_twisted_cochain(op, f);
  return ce_diff(induced_bracket_unchecked(op), rho_theta_rep(op), f);
}

Cochain twisted_diff_expanded(const TwistedOperator& op, const Cochain& f) {
  require_twisted_cochain(op, f);
  const std::size_t n = f.degree();
  const std::size_t m = op.space_dim();
  const Mat& t = op.map;
  Cochain out(n + 1, m, op.algebra_dim());

  // [Ta,Tb,y] - T rho(Tb,y)a - T rho(y,Ta)b - T theta(y,Ta,Tb)
  auto act = [&](Index a, Index b, const Vec& y) {
    const Vec ta = t.column(a);
    const Vec tb = t.column(b);
    Vec r = op.algebra.bracket(ta, tb, y);
    r -= t * op.rep.act(tb, y).column(a);
    r -= t * op.rep.act(y, ta).column(b);
    r -= t * op.cocycle.eval(y, ta, tb);
    return r;
  };
  // rho(Ta,Tb)c + rho(Tb,Tc)a + rho(Tc,Ta)b + theta(Ta,Tb,Tc)
  auto induced = [&](Index a, Index b, Index c) {
    const Vec ta = t.column(a), tb = t.column(b), tc = t.column(c);
    Vec r = op.rep.act(ta, tb).column(c);
    r += op.rep.act(tb, tc).column(a);
    r += op.rep.act(tc, ta).column(b);
    r += op.cocycle.eval(ta, tb, tc);
    return r;
  };

  const Rational outer = (n % 2 == 1) ? Rational(1) : Rational(-1);
  std::vector<Index> sub;
  for (std::size_t b = 0; b < out.blocks(); ++b) {
    const std::vector<Index> u = out.block_args(b);
    Vec r(op.algebra_dim());

    sub.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(2 * n - 2));
    sub.push_back(u[2 * n - 1]);
    r.add_scaled(outer, act(u[2 * n], u[2 * n - 2], f.at(sub)));

    sub.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(2 * n - 1));
    r.add_scaled(outer, act(u[2 * n - 1], u[2 * n], f.at(sub)));

    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t a = 2 * k - 2;
      const std::size_t c = 2 * k - 1;
      sub.clear();
      for (std::size_t p = 0; p < u.size(); ++p) {
        if (p != a && p != c) sub.push_back(u[p]);
      }
      const Rational sk = (k % 2 == 1) ? Rational(1) : Rational(-1);
      r.add_scaled(sk, act(u[a], u[c], f.at(sub)));
      for (std::size_t j = 2 * k + 1; j <= 2 * n + 1; ++j) {
        r.add_scaled(-sk, f.at_with(sub, j - 3, induced(u[a], u[c], u[j - 1])));
      }
    }
    out.set_block(b, r);
  }
  return out;
}

Cochain twisted_diff(const TwistedOperator& op, const Cochain& f) {
  Cochain generic = twisted_diff_generic(op, f);
  const Cochain expanded = twisted_diff_expanded(op, f);
  for (std::size_t b = 0; b < generic.blocks(); ++b) {
    if (generic.block(b) != expanded.block(b)) {
      throw FormulaDisagreement("expanded twisted differential disagrees with the generic one", generic.block_args(b));
    }
  }
  return generic;
}

Cochain delta_unchecked(const TwistedOperator& op, const ZeroCochain& x) {
  op.require_shapes();
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  if (x.dim() != n) throw ShapeMismatch("0-cochain must live in g wedge g");
  Mat out(n, m);
  const auto& pairs = combinations(n, 2);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Rational a = x.at(pairs[p][0], pairs[p][1]);
    if (a.is_zero()) continue;
    const Vec ei = Vec::unit(n, pairs[p][0]);
    const Vec ej = Vec::unit(n, pairs[p][1]);
    const Mat r = op.rep.basis_op(pairs[p][0], pairs[p][1]);
    for (Index v = 0; v < m; ++v) {
      const Vec tv = op.map.column(v);
      Vec inner = r.column(v);
      inner += op.cocycle.eval(ei, ej, tv);
      Vec col = op.map * inner;
      col -= op.algebra.bracket(ei, ej, tv);
      col *= a;
      out.set_column(v, out.column(v) + col);
    }
  }
  return Cochain::from_linear_map(out);
}

Cochain delta_op(const TwistedOperator& op, const ZeroCochain& x) {
  Cochain d = delta_unchecked(op, x);
  if (!twisted_diff_generic(op, d).is_zero()) throw ValidationFailure("delta(X) is not closed");
  return d;
}

std::size_t twisted_cochain_dim(const TwistedOperator& op, std::size_t degree) {
  if (degree == 0) return binomial(op.algebra_dim(), 2);
  return Cochain::space_dim(degree, op.space_dim(), op.algebra_dim());
}

namespace {

void assemble(Mat& out, const std::function<Vec(std::size_t)>& column, unsigned threads) {
  const std::size_t cols = out.cols();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cols, 1)));
  if (threads <= 1) {
    for (std::size_t c = 0; c < cols; ++c) out.set_column(c, column(c));
    return;
  }
  // Each worker owns a fixed stride of columns, so the matrix is identical to
  // the sequential one.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < cols; c += threads) out.set_column(c, column(c));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Mat twisted_differential_matrix(const TwistedOperator& op, std::size_t degree, unsigned threads) {
  op.require_shapes();
  const std::size_t n = op.algebra_dim();
  const std::size_t m = op.space_dim();
  Mat out(twisted_cochain_dim(op, degree + 1), twisted_cochain_dim(op, degree));
  if (degree == 0) {
    assemble(out, [&](std::size_t c) {
      return delta_unchecked(op, ZeroCochain::from_coefficients(n, Vec::unit(out.cols(), c))).coefficients();
    }, threads);
    return out;
  }
  const ThreeLieAlgebra algebra = induced_bracket_unchecked(op);
  const Representation3 rep = rho_theta_rep(op);
  assemble(out, [&](std::size_t c) {
    const Cochain unit = Cochain::from_coefficients(degree, m, n, Vec::unit(out.cols(), c));
    return ce_diff(algebra, rep, unit).coefficients();
  }, threads);
  return out;
}

CohomologyResult cohomology_dims(const TwistedOperator& op, std::size_t degree, std::size_t cap, unsigned threads) {
  op.require_shapes();
  CohomologyResult res;
  res.degree = degree;
  res.dim_cochains = twisted_cochain_dim(op, degree);
  const std::size_t next = twisted_cochain_dim(op, degree + 1);
  if (std::max(res.dim_cochains, next) > cap) {
    throw TooLarge("cochain space of dimension " + std::to_string(std::max(res.dim_cochains, next)) +
                   " exceeds the cap " + std::to_string(cap));
  }
  const std::vector<Vec> cocycles = kernel_basis(twisted_differential_matrix(op, degree, threads));
  res.dim_cocycles = cocycles.size();

  std::vector<Vec> coboundaries;
  if (degree > 0) {
    const Mat prev = twisted_differential_matrix(op, degree - 1, threads);
    for (std::size_t c = 0; c < prev.cols(); ++c) coboundaries.push_back(prev.column(c));
  }
  res.dim_cohomology = quotient_dim(cocycles, coboundaries);
  res.dim_coboundaries = res.dim_cocycles - res.dim_cohomology;

  RowSpace b_space(res.dim_cochains);
  for (const auto& b : coboundaries) b_space.add(b);
  RowSpace z_mod_b = b_space;
  for (const auto& z : cocycles) {
    if (z_mod_b.add(z)) res.representatives.push_back(b_space.reduce(z));
  }
  return res;
}

}  // namespace trilie
