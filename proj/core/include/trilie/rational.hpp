#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace trilie {

/// Exact rational number backed by GMP, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);
  explicit Rational(mpq_class q);

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when q = 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& get() const { return q_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trilie
