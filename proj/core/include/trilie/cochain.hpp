#pragma once

#include "trilie/alternating.hpp"
#include "trilie/matrix.hpp"
#include "trilie/structures.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace trilie {

/// Degree-n cochain with 2n-1 arguments: (n-1) skew pairs followed by one
/// single argument. For n >= 2 the last three arguments are taken fully skew,
/// so coefficients live on (n-2) increasing pairs times one increasing triple.
/// Degree 1 is a plain linear map.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim);

  static std::size_t arity(std::size_t degree) { return 2 * degree - 1; }
  static std::size_t block_count(std::size_t degree, std::size_t source_dim);
  static std::size_t space_dim(std::size_t degree, std::size_t source_dim, std::size_t target_dim) {
    return block_count(degree, source_dim) * target_dim;
  }

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t source_dim() const { return source_; }
  [[nodiscard]] std::size_t target_dim() const { return target_; }
  [[nodiscard]] std::size_t blocks() const { return block_count(degree_, source_); }
  /// Length of the flat coefficient vector.
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] const Vec& coefficients() const { return coeffs_; }
  static Cochain from_coefficients(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Vec coeffs);

  /// Argument tuple of block `b` in canonical order.
  [[nodiscard]] std::vector<Index> block_args(std::size_t b) const;
  /// Canonical block and sign for an argument tuple; sign 0 means the value vanishes.
  [[nodiscard]] std::pair<std::size_t, int> locate(std::span<const Index> args) const;

  [[nodiscard]] Vec block(std::size_t b) const;
  void set_block(std::size_t b, const Vec& value);

  /// Value on basis arguments in any order.
  [[nodiscard]] Vec at(std::span<const Index> args) const;
  /// Value on basis arguments except slot `slot`, which carries vector `v`.
  [[nodiscard]] Vec at_with(std::span<const Index> args, std::size_t slot, const Vec& v) const;
  /// Multilinear evaluation on coordinate vectors.
  [[nodiscard]] Vec eval(std::span<const Vec> args) const;
  /// Sets the value on basis arguments in any order (sign-corrected).
  void set(std::span<const Index> args, const Vec& value);

  [[nodiscard]] bool is_zero() const { return coeffs_.is_zero(); }

  static Cochain from_linear_map(const LinearMap& m);
  [[nodiscard]] LinearMap as_linear_map() const;
  static Cochain from_cocycle(const TwoCocycle3& theta);
  [[nodiscard]] TwoCocycle3 as_cocycle() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Rational& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_ = 0;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  Vec coeffs_;
};

/// Element of g wedge g, stored on increasing pairs.
class ZeroCochain {
 public:
  ZeroCochain() = default;
  explicit ZeroCochain(std::size_t dim) : coeffs_(dim, 2, Rational()) {}

  [[nodiscard]] std::size_t dim() const { return coeffs_.dim(); }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] Rational at(Index i, Index j) const { return coeffs_.at({i, j}); }
  void set(Index i, Index j, const Rational& a) { coeffs_.set({i, j}, a); }
  /// Coefficients in increasing-pair order.
  [[nodiscard]] Vec coefficients() const;
  static ZeroCochain from_coefficients(std::size_t dim, const Vec& coeffs);
  [[nodiscard]] bool is_zero() const { return coeffs_.is_zero(); }

  ZeroCochain& operator+=(const ZeroCochain& other);
  ZeroCochain& operator*=(const Rational& s);
  friend ZeroCochain operator+(ZeroCochain a, const ZeroCochain& b) { return a += b; }
  friend ZeroCochain operator*(const Rational& s, ZeroCochain a) { return a *= s; }
  friend bool operator==(const ZeroCochain&, const ZeroCochain&) = default;

 private:
  Alternating<Rational> coeffs_;
};

/// Chevalley-Eilenberg differential of a 3-Lie algebra `g` with coefficients
/// in `rho`, raising the degree by one. Throws ShapeMismatch.
Cochain ce_diff(const ThreeLieAlgebra& g, const Representation3& rho, const Cochain& f);

/// Matrix of ce_diff from degree n to n+1 in the flat coefficient bases.
Mat ce_diff_matrix(const ThreeLieAlgebra& g, const Representation3& rho, std::size_t degree);

}  // namespace trilie
