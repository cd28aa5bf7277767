#include "support.hpp"

#include "trilie/linalg.hpp"

#include <stdexcept>
#include <vector>

#ifndef TRILIE_FIXTURE_DIR
#error "TRILIE_FIXTURE_DIR must be defined"
#endif

namespace trilie::testing {

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational Rng::fraction() { return {uniform(-4, 4), uniform(1, 3)}; }

Rational Rng::nonzero() {
  for (;;) {
    Rational r = fraction();
    if (!r.is_zero()) return r;
  }
}

Vec Rng::vec(std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = fraction();
  return v;
}

Mat Rng::mat(std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = fraction();
  }
  return m;
}

Mat Rng::sparse_mat(std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin()) m(r, c) = integer(-2, 2);
    }
  }
  return m;
}

Mat Rng::invertible(std::size_t n) {
  for (;;) {
    Mat m = sparse_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += nonzero();
    if (try_inverse(m)) return m;
  }
}

ThreeLieAlgebra a3() {
  ThreeLieAlgebra g(3);
  g.set(0, 1, 2, Vec::unit(3, 1));
  return g;
}

ThreeLieAlgebra a4() {
  ThreeLieAlgebra g(4);
  g.set(1, 2, 3, Vec::unit(4, 0));
  g.set(0, 2, 3, -Vec::unit(4, 1));
  g.set(0, 1, 3, Vec::unit(4, 2));
  g.set(0, 1, 2, -Vec::unit(4, 3));
  return g;
}

LinearMap nij_matrix(const Rational& d, const Rational& c, const Rational& f) {
  return Mat{{d, 0, 0}, {0, c, f}, {0, 0, c}};
}

LieAlgebra l3() {
  LieAlgebra g(3);
  g.set(0, 1, Vec::unit(3, 1));
  return g;
}

LieAlgebra heisenberg() {
  LieAlgebra g(3);
  g.set(0, 1, Vec::unit(3, 2));
  return g;
}

LieAlgebra gl2() {
  // E11=0, E12=1, E21=2, E22=3
  LieAlgebra g(4);
  g.set(0, 1, Vec::unit(4, 1));
  g.set(0, 2, -Vec::unit(4, 2));
  g.set(1, 2, Vec::unit(4, 0) - Vec::unit(4, 3));
  g.set(1, 3, Vec::unit(4, 1));
  g.set(2, 3, -Vec::unit(4, 2));
  return g;
}

LieAlgebra two_affine() {
  LieAlgebra g(4);
  g.set(0, 1, Vec::unit(4, 1));
  g.set(2, 3, Vec::unit(4, 3));
  return g;
}

ThreeLieAlgebra transport(const ThreeLieAlgebra& g, const Mat& p) {
  const Mat inv = inverse(p);
  ThreeLieAlgebra out(g.dim());
  for (const auto& t : combinations(g.dim(), 3)) {
    out.set(t[0], t[1], t[2], inv * g.bracket(p.column(t[0]), p.column(t[1]), p.column(t[2])));
  }
  return out;
}

LieAlgebra transport(const LieAlgebra& g, const Mat& p) {
  const Mat inv = inverse(p);
  LieAlgebra out(g.dim());
  for (const auto& t : combinations(g.dim(), 2)) out.set(t[0], t[1], inv * g.bracket(p.column(t[0]), p.column(t[1])));
  return out;
}

LieAlgebra random_lie(Rng& rng) {
  LieAlgebra base;
  switch (rng.uniform(0, 3)) {
    case 0: base = l3(); break;
    case 1: base = heisenberg(); break;
    case 2: base = gl2(); break;
    default: base = two_affine(); break;
  }
  return transport(base, rng.invertible(base.dim()));
}

namespace {

TraceMap random_annihilator(std::size_t dim, const std::vector<Vec>& brackets, Rng& rng) {
  const std::vector<Vec> basis = kernel_basis(Mat::from_rows(dim, brackets));
  if (basis.empty()) return TraceMap{Vec(dim)};
  for (;;) {
    Vec tau(dim);
    for (const auto& b : basis) tau.add_scaled(rng.integer(-2, 2), b);
    if (!tau.is_zero()) return TraceMap{tau};
  }
}

}  // namespace

TraceMap random_trace(const LieAlgebra& g, Rng& rng) {
  std::vector<Vec> rows;
  for (const auto& p : combinations(g.dim(), 2)) rows.push_back(g.basis_bracket(p[0], p[1]));
  return random_annihilator(g.dim(), rows, rng);
}

TraceMap random_trace(const NSLieAlgebra& a, Rng& rng) {
  std::vector<Vec> rows;
  const std::size_t d = a.dim();
  for (const auto& p : combinations(d, 2)) rows.push_back(a.star(Vec::unit(d, p[0]), Vec::unit(d, p[1])));
  return random_annihilator(d, rows, rng);
}

ThreeLieAlgebra random_3lie(Rng& rng) {
  switch (rng.uniform(0, 2)) {
    case 0: return transport(a3(), rng.invertible(3));
    case 1: return transport(a4(), rng.invertible(4));
    default: {
      const LieAlgebra g = random_lie(rng);
      return induce_3lie(g, random_trace(g, rng));
    }
  }
}

Context3 random_context(Rng& rng) {
  Context3 c;
  if (rng.uniform(0, 3) == 0) {
    const LieAlgebra g = random_lie(rng);
    const TraceMap tau = random_trace(g, rng);
    c.algebra = induce_3lie(g, tau);
    c.rep = induce_rep(g, adjoint(g), tau);
  } else {
    c.algebra = random_3lie(rng);
    c.rep = adjoint(c.algebra);
  }
  const std::size_t n = c.algebra.dim();
  c.cocycle = rng.coin() ? coboundary(c.algebra, c.rep, rng.sparse_mat(c.rep.space_dim, n))
                         : TwoCocycle3(n, c.rep.space_dim);
  return c;
}

TwistedOperator random_nijenhuis_op(Rng& rng) {
  const ThreeLieAlgebra g = transport(a3(), rng.invertible(3));
  return nijenhuis_package(g, rng.sparse_mat(3, 3)).identity;
}

TwistedOperator random_invertible_twisted(Rng& rng) {
  const ThreeLieAlgebra g = random_3lie(rng);
  return inverse_cochain_operator(g, adjoint(g), rng.invertible(g.dim()));
}

TwistedOperator random_twisted(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return random_nijenhuis_op(rng);
    case 1: {
      Context3 c = random_context(rng);
      const LinearMap zero(c.algebra.dim(), c.rep.space_dim);
      return TwistedOperator{std::move(c.algebra), std::move(c.rep), std::move(c.cocycle), zero};
    }
    default: return random_invertible_twisted(rng);
  }
}

LieTwistedOperator random_lie_twisted(Rng& rng) {
  const LieAlgebra g = random_lie(rng);
  return inverse_cochain_operator_lie(g, adjoint(g), rng.invertible(g.dim()));
}

std::string fixture_path(const std::string& file) { return std::string(TRILIE_FIXTURE_DIR) + "/" + file; }

Workspace load_fixtures(std::initializer_list<const char*> files) {
  std::vector<std::filesystem::path> paths;
  for (const char* f : files) paths.emplace_back(fixture_path(f));
  return parse_workspace(paths);
}

LinearMap random_closed_term(const TwistedOperator& op, Rng& rng) {
  const std::vector<Vec> closed = kernel_basis(twisted_differential_matrix(op, 1, 1));
  Vec coeffs(twisted_cochain_dim(op, 1));
  for (const auto& k : closed) coeffs.add_scaled(rng.integer(-2, 2), k);
  return Cochain::from_coefficients(1, op.space_dim(), op.algebra_dim(), coeffs).as_linear_map();
}

ZeroCochain random_bivector(std::size_t dim, Rng& rng) {
  ZeroCochain x(dim);
  for (const auto& p : combinations(dim, 2)) x.set(p[0], p[1], rng.integer(-2, 2));
  return x;
}

}  // namespace trilie::testing
