#include "oracle.hpp"

#include "trilie/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trilie::oracle {

std::size_t bareiss_rank(const QMatrix& m) {
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) z[j] = row[j].get_num() * (l / row[j].get_den());
    a.push_back(std::move(z));
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank(const Mat& m) {
  QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) q[r][c] = m(r, c).get();
  }
  return bareiss_rank(q);
}

namespace {

using QVec = std::vector<mpq_class>;

void axpy(QVec& acc, const mpq_class& s, const QVec& x) {
  if (s == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * x[i];
}

/// Argument groups of a degree-p cochain: singles, pairs, final triple.
std::vector<std::size_t> groups(std::size_t degree) {
  if (degree == 1) return {1};
  std::vector<std::size_t> g(degree - 2, 2);
  g.push_back(3);
  return g;
}

/// Sorts each group in place; returns the sign or 0 on a repeat.
int canonicalize(std::vector<std::size_t>& t, const std::vector<std::size_t>& gs) {
  int sign = 1;
  std::size_t pos = 0;
  for (std::size_t len : gs) {
    for (std::size_t i = pos; i < pos + len; ++i) {
      for (std::size_t j = pos; j + 1 < pos + len; ++j) {
        if (t[j] > t[j + 1]) {
          std::swap(t[j], t[j + 1]);
          sign = -sign;
        }
      }
    }
    for (std::size_t j = pos; j + 1 < pos + len; ++j) {
      if (t[j] == t[j + 1]) return 0;
    }
    pos += len;
  }
  return sign;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

TwistedComplex::TwistedComplex(const TwistedOperator& op) : m_(op.space_dim()), n_(op.algebra_dim()) {
  const std::size_t m = m_, n = n_;
  // Raw tables over all ordered basis tuples.
  std::vector<mpq_class> t(n * m), g3(n * n * n * n), rho(n * n * m * m), theta(n * n * n * m);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t a = 0; a < m; ++a) t[l * m + a] = op.map(l, a).get();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mat r = op.rep.basis_op(i, j);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) rho[((i * n + j) * m + a) * m + b] = r(a, b).get();
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Vec br = op.algebra.basis_bracket(i, j, k);
        const Vec th = op.cocycle.basis_value(i, j, k);
        for (std::size_t l = 0; l < n; ++l) g3[((i * n + j) * n + k) * n + l] = br[l].get();
        for (std::size_t a = 0; a < m; ++a) theta[((i * n + j) * n + k) * m + a] = th[a].get();
      }
    }
  }

  auto apply_t = [&](const QVec& v) {
    QVec out(n);
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t a = 0; a < m; ++a) out[l] += t[l * m + a] * v[a];
    }
    return out;
  };
  auto t_col = [&](std::size_t a) {
    QVec out(n);
    for (std::size_t l = 0; l < n; ++l) out[l] = t[l * m + a];
    return out;
  };
  auto unit = [](std::size_t dim, std::size_t i) {
    QVec u(dim);
    u[i] = 1;
    return u;
  };
  auto bracket_g = [&](const QVec& x, const QVec& y, const QVec& z) {
    QVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (z[k] == 0) continue;
          const mpq_class c = x[i] * y[j] * z[k];
          for (std::size_t l = 0; l < n; ++l) out[l] += c * g3[((i * n + j) * n + k) * n + l];
        }
      }
    }
    return out;
  };
  auto act = [&](const QVec& x, const QVec& y, const QVec& v) {
    QVec out(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const mpq_class c = x[i] * y[j];
        if (c == 0) continue;
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) out[a] += c * rho[((i * n + j) * m + a) * m + b] * v[b];
        }
      }
    }
    return out;
  };
  auto cocycle = [&](const QVec& x, const QVec& y, const QVec& z) {
    QVec out(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const mpq_class c = x[i] * y[j] * z[k];
          if (c == 0) continue;
          for (std::size_t a = 0; a < m; ++a) out[a] += c * theta[((i * n + j) * n + k) * m + a];
        }
      }
    }
    return out;
  };

  bracket_v_.resize(m * m * m * m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        const QVec tu = t_col(u), tv = t_col(v), tw = t_col(w);
        QVec r = act(tu, tv, unit(m, w));
        axpy(r, 1, act(tv, tw, unit(m, u)));
        axpy(r, 1, act(tw, tu, unit(m, v)));
        axpy(r, 1, cocycle(tu, tv, tw));
        for (std::size_t a = 0; a < m; ++a) bracket_v_[((u * m + v) * m + w) * m + a] = r[a];
      }
    }
  }
  rho_t_.resize(m * m * n * n);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const QVec tu = t_col(u), tv = t_col(v);
      for (std::size_t i = 0; i < n; ++i) {
        const QVec x = unit(n, i);
        QVec inner = act(tv, x, unit(m, u));
        axpy(inner, 1, act(x, tu, unit(m, v)));
        axpy(inner, 1, cocycle(x, tu, tv));
        QVec r = bracket_g(tu, tv, x);
        axpy(r, -1, apply_t(inner));
        for (std::size_t l = 0; l < n; ++l) rho_t_[((u * m + v) * n + i) * n + l] = r[l];
      }
    }
  }
  delta_.resize(n * n * m * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t v = 0; v < m; ++v) {
        const QVec x = unit(n, i), y = unit(n, j), tv = t_col(v);
        QVec inner = act(x, y, unit(m, v));
        axpy(inner, 1, cocycle(x, y, tv));
        QVec r = apply_t(inner);
        axpy(r, -1, bracket_g(x, y, tv));
        for (std::size_t l = 0; l < n; ++l) delta_[((i * n + j) * m + v) * n + l] = r[l];
      }
    }
  }
}

std::size_t TwistedComplex::cochain_dim(std::size_t degree) const {
  return keys(degree).size() * (degree == 0 ? 1 : n_);
}

std::vector<std::vector<std::size_t>> TwistedComplex::keys(std::size_t degree) const {
  std::vector<std::vector<std::size_t>> out;
  if (degree == 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) out.push_back({i, j});
    }
    return out;
  }
  const auto gs = groups(degree);
  const std::size_t arity = 2 * degree - 1;
  std::vector<std::size_t> t(arity, 0);
  do {
    std::vector<std::size_t> c = t;
    if (canonicalize(c, gs) != 0 && c == t) out.push_back(t);
  } while (next_tuple(t, m_));
  return out;
}

TwistedComplex::Dense TwistedComplex::basis_element(std::size_t degree, const std::vector<std::size_t>& key,
                                                    std::size_t target) const {
  const auto gs = groups(degree);
  const std::size_t arity = 2 * degree - 1;
  std::size_t size = n_;
  for (std::size_t i = 0; i < arity; ++i) size *= m_;
  Dense f(size);
  std::vector<std::size_t> t(arity, 0);
  do {
    std::vector<std::size_t> c = t;
    const int s = canonicalize(c, gs);
    if (s == 0 || c != key) continue;
    std::size_t idx = 0;
    for (std::size_t a : t) idx = idx * m_ + a;
    f[idx * n_ + target] = s;
  } while (next_tuple(t, m_));
  return f;
}

TwistedComplex::Dense TwistedComplex::apply(std::size_t p, const Dense& f) const {
  const std::size_t m = m_, n = n_;
  const std::size_t out_arity = 2 * p + 1;
  std::size_t size = n;
  for (std::size_t i = 0; i < out_arity; ++i) size *= m;
  Dense out(size);

  auto offset = [&](const std::vector<std::size_t>& y) {
    std::size_t r = 0;
    for (std::size_t a : y) r = r * m + a;
    return r * n;
  };
  std::vector<std::size_t> x(out_arity, 0), y;
  QVec res(n);
  auto add_rho = [&](const mpq_class& sign, std::size_t u, std::size_t v, const std::vector<std::size_t>& args) {
    const std::size_t base = offset(args);
    for (std::size_t i = 0; i < n; ++i) {
      if (f[base + i] == 0) continue;
      const mpq_class c = sign * f[base + i];
      for (std::size_t l = 0; l < n; ++l) res[l] += c * rho_t_[((u * m + v) * n + i) * n + l];
    }
  };
  const mpq_class outer = (p % 2 == 1) ? 1 : -1;
  std::size_t pos = 0;
  do {
    std::fill(res.begin(), res.end(), mpq_class(0));
    // (-1)^{p+1} rho(x_{2p+1}, x_{2p-1}) f(x_1..x_{2p-2}, x_{2p})
    y.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(2 * p - 2));
    y.push_back(x[2 * p - 1]);
    add_rho(outer, x[2 * p], x[2 * p - 2], y);
    // (-1)^{p+1} rho(x_{2p}, x_{2p+1}) f(x_1..x_{2p-1})
    y.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(2 * p - 1));
    add_rho(outer, x[2 * p - 1], x[2 * p], y);
    for (std::size_t k = 1; k <= p; ++k) {
      const std::size_t a = 2 * k - 2, c = 2 * k - 1;
      const mpq_class sk = (k % 2 == 1) ? 1 : -1;
      y.clear();
      for (std::size_t q = 0; q < out_arity; ++q) {
        if (q != a && q != c) y.push_back(x[q]);
      }
      add_rho(sk, x[a], x[c], y);
      for (std::size_t jj = 2 * k; jj < out_arity; ++jj) {
        const std::size_t slot = jj - 2;
        const std::size_t keep = y[slot];
        for (std::size_t b = 0; b < m; ++b) {
          const mpq_class& coef = bracket_v_[((x[a] * m + x[c]) * m + x[jj]) * m + b];
          if (coef == 0) continue;
          y[slot] = b;
          const std::size_t base = offset(y);
          for (std::size_t l = 0; l < n; ++l) res[l] -= sk * coef * f[base + l];
        }
        y[slot] = keep;
      }
    }
    for (std::size_t l = 0; l < n; ++l) out[pos + l] = res[l];
    pos += n;
  } while (next_tuple(x, m));
  return out;
}

TwistedComplex::Dense TwistedComplex::delta(std::size_t i, std::size_t j) const {
  Dense f(m_ * n_);
  for (std::size_t v = 0; v < m_; ++v) {
    for (std::size_t l = 0; l < n_; ++l) f[v * n_ + l] = delta_[((i * n_ + j) * m_ + v) * n_ + l];
  }
  return f;
}

std::vector<mpq_class> TwistedComplex::read(std::size_t degree, const Dense& f) const {
  const auto gs = groups(degree);
  const std::size_t arity = 2 * degree - 1;
  auto offset = [&](const std::vector<std::size_t>& y) {
    std::size_t r = 0;
    for (std::size_t a : y) r = r * m_ + a;
    return r * n_;
  };
  std::vector<std::size_t> t(arity, 0);
  do {
    std::vector<std::size_t> c = t;
    const int s = canonicalize(c, gs);
    const std::size_t base = offset(t);
    for (std::size_t l = 0; l < n_; ++l) {
      const mpq_class expected = s == 0 ? mpq_class(0) : mpq_class(s) * f[offset(c) + l];
      if (f[base + l] != expected) throw std::logic_error("oracle: image is not in the symmetric cochain space");
    }
  } while (next_tuple(t, m_));
  std::vector<mpq_class> out;
  for (const auto& key : keys(degree)) {
    const std::size_t base = offset(key);
    for (std::size_t l = 0; l < n_; ++l) out.push_back(f[base + l]);
  }
  return out;
}

QMatrix TwistedComplex::differential(std::size_t degree) const {
  std::vector<std::vector<mpq_class>> columns;
  if (degree == 0) {
    for (const auto& key : keys(0)) columns.push_back(read(1, delta(key[0], key[1])));
  } else {
    for (const auto& key : keys(degree)) {
      for (std::size_t l = 0; l < n_; ++l) columns.push_back(read(degree + 1, apply(degree, basis_element(degree, key, l))));
    }
  }
  const std::size_t rows = cochain_dim(degree + 1);
  QMatrix out(rows, std::vector<mpq_class>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) out[r][c] = columns[c][r];
  }
  return out;
}

Dims TwistedComplex::cohomology(std::size_t degree) const {
  Dims d;
  d.cochains = cochain_dim(degree);
  d.cocycles = d.cochains - bareiss_rank(differential(degree));
  d.coboundaries = degree == 0 ? 0 : bareiss_rank(differential(degree - 1));
  d.cohomology = d.cocycles - d.coboundaries;
  return d;
}

std::vector<mpq_class> TwistedComplex::coordinates(std::size_t degree, const Vec& flat) const {
  std::vector<mpq_class> out;
  if (degree == 0) {
    const ZeroCochain x = ZeroCochain::from_coefficients(n_, flat);
    for (const auto& key : keys(0)) out.push_back(x.at(key[0], key[1]).get());
    return out;
  }
  const Cochain c = Cochain::from_coefficients(degree, m_, n_, flat);
  for (const auto& key : keys(degree)) {
    const Vec v = c.at(key);
    for (std::size_t l = 0; l < n_; ++l) out.push_back(v[l].get());
  }
  return out;
}

}  // namespace trilie::oracle
