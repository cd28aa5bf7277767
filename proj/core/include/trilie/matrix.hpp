#pragma once

#include "trilie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace trilie {

/// Dense vector of rationals.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : v_(n) {}
  Vec(std::initializer_list<Rational> values) : v_(values) {}
  explicit Vec(std::vector<Rational> values) : v_(std::move(values)) {}

  static Vec zero(std::size_t n) { return Vec(n); }
  static Vec unit(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t size() const { return v_.size(); }
  [[nodiscard]] bool empty() const { return v_.empty(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  [[nodiscard]] auto begin() const { return v_.begin(); }
  [[nodiscard]] auto end() const { return v_.end(); }
  [[nodiscard]] auto begin() { return v_.begin(); }
  [[nodiscard]] auto end() { return v_.end(); }
  [[nodiscard]] const std::vector<Rational>& entries() const { return v_; }

  [[nodiscard]] bool is_zero() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Rational& s);
  /// this += s * other
  Vec& add_scaled(const Rational& s, const Vec& other);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, const Rational& s) { return a *= s; }
  friend Vec operator*(const Rational& s, Vec a) { return a *= s; }
  Vec operator-() const;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Rational> v_;
};

Rational dot(const Vec& a, const Vec& b);

/// Dense row-major matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Mat identity(std::size_t n);
  static Mat from_columns(std::size_t rows, std::span<const Vec> columns);
  static Mat from_rows(std::size_t cols, std::span<const Vec> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  [[nodiscard]] Vec column(std::size_t c) const;
  [[nodiscard]] Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);
  void set_row(std::size_t r, const Vec& v);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] Mat transpose() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Rational& s);
  Mat& add_scaled(const Rational& s, const Mat& other);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rational& s) { return a *= s; }
  friend Mat operator*(const Rational& s, Mat a) { return a *= s; }
  Mat operator-() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace trilie
