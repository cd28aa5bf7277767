#include "trilie/cochain.hpp"

#include "trilie/errors.hpp"

#include <array>

namespace trilie {

std::size_t Cochain::block_count(std::size_t degree, std::size_t source_dim) {
  if (degree == 0) throw std::invalid_argument("Cochain: degree must be at least 1");
  if (degree == 1) return source_dim;
  std::size_t count = binomial(source_dim, 3);
  for (std::size_t p = 0; p + 2 < degree; ++p) count *= binomial(source_dim, 2);
  return count;
}

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
    : degree_(degree),
      source_(source_dim),
      target_(target_dim),
      coeffs_(block_count(degree, source_dim) * target_dim) {}

Cochain Cochain::from_coefficients(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Vec coeffs) {
  Cochain c(degree, source_dim, target_dim);
  if (coeffs.size() != c.size()) throw ShapeMismatch("Cochain: coefficient vector length");
  c.coeffs_ = std::move(coeffs);
  return c;
}

std::vector<Index> Cochain::block_args(std::size_t b) const {
  if (degree_ == 1) return {b};
  const std::size_t triples = binomial(source_, 3);
  const std::size_t pairs = binomial(source_, 2);
  const auto& triple = combinations(source_, 3)[b % triples];
  std::size_t rest = b / triples;
  std::vector<Index> args(arity(degree_));
  const auto& pair_list = combinations(source_, 2);
  for (std::size_t p = degree_ - 2; p-- > 0;) {
    const auto& pr = pair_list[rest % pairs];
    rest /= pairs;
    args[2 * p] = pr[0];
    args[2 * p + 1] = pr[1];
  }
  const std::size_t t0 = 2 * (degree_ - 2);
  args[t0] = triple[0];
  args[t0 + 1] = triple[1];
  args[t0 + 2] = triple[2];
  return args;
}

std::pair<std::size_t, int> Cochain::locate(std::span<const Index> args) const {
  if (args.size() != arity(degree_)) throw ShapeMismatch("Cochain: wrong number of arguments");
  if (degree_ == 1) return {args[0], 1};
  int sign = 1;
  std::size_t block = 0;
  const std::size_t pairs = binomial(source_, 2);
  for (std::size_t p = 0; p + 2 < degree_; ++p) {
    std::array<Index, 2> pr{args[2 * p], args[2 * p + 1]};
    const int s = sort_with_sign(pr);
    if (s == 0) return {0, 0};
    sign *= s;
    block = block * pairs + combination_rank(source_, pr);
  }
  const std::size_t t0 = 2 * (degree_ - 2);
  std::array<Index, 3> tr{args[t0], args[t0 + 1], args[t0 + 2]};
  const int s = sort_with_sign(tr);
  if (s == 0) return {0, 0};
  sign *= s;
  block = block * binomial(source_, 3) + combination_rank(source_, tr);
  return {block, sign};
}

Vec Cochain::block(std::size_t b) const {
  Vec v(target_);
  for (std::size_t a = 0; a < target_; ++a) v[a] = coeffs_[b * target_ + a];
  return v;
}

void Cochain::set_block(std::size_t b, const Vec& value) {
  if (value.size() != target_) throw ShapeMismatch("Cochain: value length");
  for (std::size_t a = 0; a < target_; ++a) coeffs_[b * target_ + a] = value[a];
}

Vec Cochain::at(std::span<const Index> args) const {
  const auto [b, sign] = locate(args);
  if (sign == 0) return Vec(target_);
  Vec v = block(b);
  if (sign < 0) v = -v;
  return v;
}

Vec Cochain::at_with(std::span<const Index> args, std::size_t slot, const Vec& v) const {
  std::vector<Index> idx(args.begin(), args.end());
  Vec acc(target_);
  for (Index m = 0; m < v.size(); ++m) {
    if (v[m].is_zero()) continue;
    idx[slot] = m;
    acc.add_scaled(v[m], at(idx));
  }
  return acc;
}

namespace {

void eval_rec(const Cochain& f, std::span<const Vec> args, std::size_t slot, const Rational& coeff,
              std::vector<Index>& idx, Vec& acc) {
  if (slot == args.size()) {
    acc.add_scaled(coeff, f.at(idx));
    return;
  }
  for (Index i = 0; i < args[slot].size(); ++i) {
    if (args[slot][i].is_zero()) continue;
    idx[slot] = i;
    eval_rec(f, args, slot + 1, coeff * args[slot][i], idx, acc);
  }
}

}  // namespace

Vec Cochain::eval(std::span<const Vec> args) const {
  if (args.size() != arity(degree_)) throw ShapeMismatch("Cochain: wrong number of arguments");
  std::vector<Index> idx(args.size());
  Vec acc(target_);
  eval_rec(*this, args, 0, Rational(1), idx, acc);
  return acc;
}

void Cochain::set(std::span<const Index> args, const Vec& value) {
  const auto [b, sign] = locate(args);
  if (sign == 0) throw std::invalid_argument("Cochain::set: arguments force the value to vanish");
  set_block(b, sign > 0 ? value : -value);
}

Cochain Cochain::from_linear_map(const LinearMap& m) {
  Cochain c(1, m.cols(), m.rows());
  for (std::size_t i = 0; i < m.cols(); ++i) c.set_block(i, m.column(i));
  return c;
}

LinearMap Cochain::as_linear_map() const {
  if (degree_ != 1) throw ShapeMismatch("Cochain: only degree 1 is a linear map");
  Mat m(target_, source_);
  for (std::size_t i = 0; i < source_; ++i) m.set_column(i, block(i));
  return m;
}

Cochain Cochain::from_cocycle(const TwoCocycle3& theta) {
  Cochain c(2, theta.algebra_dim(), theta.space_dim());
  for (std::size_t b = 0; b < theta.values.size(); ++b) c.set_block(b, theta.values.stored(b));
  return c;
}

TwoCocycle3 Cochain::as_cocycle() const {
  if (degree_ != 2) throw ShapeMismatch("Cochain: only degree 2 is a trilinear map");
  TwoCocycle3 theta(source_, target_);
  for (std::size_t b = 0; b < blocks(); ++b) theta.values.stored(b) = block(b);
  return theta;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (other.degree_ != degree_ || other.source_ != source_ || other.target_ != target_) {
    throw ShapeMismatch("Cochain: adding cochains of different shape");
  }
  coeffs_ += other.coeffs_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (other.degree_ != degree_ || other.source_ != source_ || other.target_ != target_) {
    throw ShapeMismatch("Cochain: subtracting cochains of different shape");
  }
  coeffs_ -= other.coeffs_;
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

Vec ZeroCochain::coefficients() const {
  Vec v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_.stored(i);
  return v;
}

ZeroCochain ZeroCochain::from_coefficients(std::size_t dim, const Vec& coeffs) {
  ZeroCochain z(dim);
  if (coeffs.size() != z.size()) throw ShapeMismatch("ZeroCochain: coefficient vector length");
  for (std::size_t i = 0; i < coeffs.size(); ++i) z.coeffs_.stored(i) = coeffs[i];
  return z;
}

ZeroCochain& ZeroCochain::operator+=(const ZeroCochain& other) {
  coeffs_ += other.coeffs_;
  return *this;
}

ZeroCochain& ZeroCochain::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

Cochain ce_diff(const ThreeLieAlgebra& g, const Representation3& rho, const Cochain& f) {
  require_shapes(g, rho);
  if (f.source_dim() != g.dim() || f.target_dim() != rho.space_dim) {
    throw ShapeMismatch("ce_diff: cochain shape differs from (algebra, module)");
  }
  const std::size_t n = f.degree();
  const std::size_t dim = g.dim();
  Cochain out(n + 1, dim, rho.space_dim);
  const Rational outer = (n % 2 == 1) ? Rational(1) : Rational(-1);  // (-1)^{n+1}
  std::vector<Index> sub;
  for (std::size_t b = 0; b < out.blocks(); ++b) {
    const std::vector<Index> x = out.block_args(b);  // 2n+1 entries
    Vec r(rho.space_dim);

    // (-1)^{n+1} rho(x[2n], x[2n-2]) f(x[0..2n-3], x[2n-1])
    sub.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(2 * n - 2));
    sub.push_back(x[2 * n - 1]);
    r.add_scaled(outer, rho.basis_op(x[2 * n], x[2 * n - 2]) * f.at(sub));

    // (-1)^{n+1} rho(x[2n-1], x[2n]) f(x[0..2n-2])
    sub.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(2 * n - 1));
    r.add_scaled(outer, rho.basis_op(x[2 * n - 1], x[2 * n]) * f.at(sub));

    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t a = 2 * k - 2;
      const std::size_t c = 2 * k - 1;
      sub.clear();
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (p != a && p != c) sub.push_back(x[p]);
      }
      // (-1)^{k+1} rho(x[a], x[c]) f(x without a, c)
      const Rational sk = (k % 2 == 1) ? Rational(1) : Rational(-1);
      r.add_scaled(sk, rho.basis_op(x[a], x[c]) * f.at(sub));
      // (-1)^k f(..., [x[a], x[c], x[j-1]] at reduced slot j-3, ...)
      for (std::size_t j = 2 * k + 1; j <= 2 * n + 1; ++j) {
        const Vec br = g.basis_bracket(x[a], x[c], x[j - 1]);
        if (br.is_zero()) continue;
        r.add_scaled(-sk, f.at_with(sub, j - 3, br));
      }
    }
    out.set_block(b, r);
  }
  return out;
}

Mat ce_diff_matrix(const ThreeLieAlgebra& g, const Representation3& rho, std::size_t degree) {
  const std::size_t rows = Cochain::space_dim(degree + 1, g.dim(), rho.space_dim);
  const std::size_t cols = Cochain::space_dim(degree, g.dim(), rho.space_dim);
  Mat m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const Cochain unit = Cochain::from_coefficients(degree, g.dim(), rho.space_dim, Vec::unit(cols, c));
    m.set_column(c, ce_diff(g, rho, unit).coefficients());
  }
  return m;
}

}  // namespace trilie
