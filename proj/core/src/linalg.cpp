#include "trilie/linalg.hpp"

#include "trilie/errors.hpp"

#include <algorithm>
#include <utility>

namespace trilie {

EchelonForm rref(Mat m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t c = col; c < cols; ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const auto [red, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> try_inverse(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

Mat inverse(const Mat& m) {
  auto inv = try_inverse(m);
  if (!inv) throw NotInvertible("matrix is singular");
  return *std::move(inv);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Mat aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  const auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, cols);
  return x;
}

Vec RowSpace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational coeff = v[pivots_[i]];
    if (!coeff.is_zero()) v.add_scaled(-coeff, rows_[i]);
  }
  return v;
}

bool RowSpace::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < r.size() && r[p].is_zero()) ++p;
  if (p == r.size()) return false;
  r *= Rational(1) / r[p];
  for (auto& row : rows_) {
    const Rational coeff = row[p];
    if (!coeff.is_zero()) row.add_scaled(-coeff, r);
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

std::size_t span_rank(std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  return rank(Mat::from_rows(vectors.front().size(), vectors));
}

std::size_t quotient_dim(std::span<const Vec> cocycles, std::span<const Vec> coboundaries) {
  if (coboundaries.empty()) return span_rank(cocycles);
  if (cocycles.empty()) {
    for (const auto& b : coboundaries) {
      if (!b.is_zero()) throw ContainmentViolation("coboundary outside the cocycle span");
    }
    return 0;
  }
  RowSpace z(cocycles.front().size());
  for (const auto& v : cocycles) z.add(v);
  for (const auto& b : coboundaries) {
    if (!z.contains(b)) throw ContainmentViolation("coboundary outside the cocycle span");
  }
  return z.dim() - span_rank(coboundaries);
}

}  // namespace trilie
