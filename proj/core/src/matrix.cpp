#include "trilie/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace trilie {

Vec Vec::unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec& Vec::operator+=(const Vec& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += other.v_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  assert(size() == other.size());
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= other.v_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

Vec& Vec::add_scaled(const Rational& s, const Vec& other) {
  assert(size() == other.size());
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!other.v_[i].is_zero()) v_[i] += s * other.v_[i];
  }
  return *this;
}

Vec Vec::operator-() const {
  Vec r(*this);
  for (auto& x : r.v_) x = -x;
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, std::span<const Vec> columns) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Mat Mat::from_rows(std::size_t cols, std::span<const Vec> rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  return Vec(std::vector<Rational>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                   a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

void Mat::set_column(std::size_t c, const Vec& v) {
  assert(v.size() == rows_);
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Mat::set_row(std::size_t r, const Vec& v) {
  assert(v.size() == cols_);
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat& Mat::operator+=(const Mat& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat& Mat::add_scaled(const Rational& s, const Mat& other) {
  assert(rows_ == other.rows_ && cols_ == other.cols_);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!other.a_[i].is_zero()) a_[i] += s * other.a_[i];
  }
  return *this;
}

Mat Mat::operator-() const {
  Mat r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: product shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Mat: matrix-vector shape mismatch");
  Vec r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!v[k].is_zero() && !a(i, k).is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

}  // namespace trilie
