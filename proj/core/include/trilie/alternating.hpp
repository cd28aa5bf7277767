#pragma once

#include "trilie/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trilie {

using Index = std::size_t;
using Combination = std::vector<Index>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0..n-1} as increasing tuples in lexicographic order.
/// The returned list is cached and immutable.
const std::vector<Combination>& combinations(std::size_t n, std::size_t k);

/// Position of an increasing tuple in `combinations(n, k)`.
std::size_t combination_rank(std::size_t n, std::span<const Index> combo);

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(std::span<Index> idx);

/// Zero value with the same shape as `like`.
inline Vec zero_like(const Vec& like) { return Vec(like.size()); }
inline Mat zero_like(const Mat& like) { return Mat(like.rows(), like.cols()); }
inline Rational zero_like(const Rational&) { return {}; }

/// Fully skew multilinear map on a `dim`-dimensional space with `arity`
/// arguments, stored on strictly increasing basis tuples.
template <class Value>
class Alternating {
 public:
  Alternating() = default;
  Alternating(std::size_t dim, std::size_t arity, Value zero)
      : dim_(dim), arity_(arity), zero_(std::move(zero)), values_(binomial(dim, arity), zero_) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const Value& zero() const { return zero_; }
  [[nodiscard]] const std::vector<Combination>& tuples() const { return combinations(dim_, arity_); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  /// Value on the increasing tuple with the given rank.
  [[nodiscard]] const Value& stored(std::size_t rank) const { return values_[rank]; }
  Value& stored(std::size_t rank) { return values_[rank]; }

  /// Value on an arbitrary basis tuple, sign-corrected.
  [[nodiscard]] Value at(std::span<const Index> idx) const {
    check_arity(idx.size());
    std::array<Index, 8> buf{};
    std::copy(idx.begin(), idx.end(), buf.begin());
    const std::span<Index> sorted(buf.data(), idx.size());
    const int sign = sort_with_sign(sorted);
    if (sign == 0) return zero_;
    const Value& v = values_[combination_rank(dim_, sorted)];
    return sign > 0 ? v : negate(v);
  }
  [[nodiscard]] Value at(std::initializer_list<Index> idx) const {
    return at(std::span<const Index>(idx.begin(), idx.size()));
  }

  /// Sets the value on a basis tuple; the tuple may be in any order.
  void set(std::span<const Index> idx, const Value& value) {
    check_arity(idx.size());
    std::array<Index, 8> buf{};
    std::copy(idx.begin(), idx.end(), buf.begin());
    const std::span<Index> sorted(buf.data(), idx.size());
    const int sign = sort_with_sign(sorted);
    if (sign == 0) throw std::invalid_argument("Alternating::set: repeated index");
    values_[combination_rank(dim_, sorted)] = sign > 0 ? value : negate(value);
  }
  void set(std::initializer_list<Index> idx, const Value& value) {
    set(std::span<const Index>(idx.begin(), idx.size()), value);
  }

  /// Multilinear evaluation on coordinate vectors.
  [[nodiscard]] Value eval(std::span<const Vec> args) const {
    check_arity(args.size());
    Value acc = zero_;
    std::array<Index, 8> idx{};
    accumulate(args, 0, Rational(1), idx, acc);
    return acc;
  }
  [[nodiscard]] Value eval(const Vec& x, const Vec& y) const {
    const std::array<Vec, 2> a{x, y};
    return eval(std::span<const Vec>(a));
  }
  [[nodiscard]] Value eval(const Vec& x, const Vec& y, const Vec& z) const {
    const std::array<Vec, 3> a{x, y, z};
    return eval(std::span<const Vec>(a));
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : values_) {
      if (!value_is_zero(v)) return false;
    }
    return true;
  }

  Alternating& operator+=(const Alternating& other) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  Alternating& operator*=(const Rational& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }
  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator*(const Rational& s, Alternating a) { return a *= s; }

  friend bool operator==(const Alternating& a, const Alternating& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

 private:
  static Value negate(const Value& v) { return -v; }
  static bool value_is_zero(const Value& v) { return v.is_zero(); }

  void check_arity(std::size_t n) const {
    if (n != arity_) throw std::invalid_argument("Alternating: wrong number of arguments");
  }

  void accumulate(std::span<const Vec> args, std::size_t slot, const Rational& coeff,
                  std::array<Index, 8>& idx, Value& acc) const {
    if (slot == arity_) {
      std::array<Index, 8> buf = idx;
      const std::span<Index> sorted(buf.data(), arity_);
      const int sign = sort_with_sign(sorted);
      if (sign == 0) return;
      Value term = values_[combination_rank(dim_, sorted)];
      term *= sign > 0 ? coeff : -coeff;
      acc += term;
      return;
    }
    const Vec& a = args[slot];
    for (Index i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      idx[slot] = i;
      accumulate(args, slot + 1, coeff * a[i], idx, acc);
    }
  }

  std::size_t dim_ = 0;
  std::size_t arity_ = 0;
  Value zero_{};
  std::vector<Value> values_;
};

}  // namespace trilie
