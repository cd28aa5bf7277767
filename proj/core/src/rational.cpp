#include "trilie/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace trilie {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(numerator, 1);
  q_ /= denominator;
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(s)));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  q_ += other.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  q_ -= other.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  q_ *= other.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= other.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trilie
