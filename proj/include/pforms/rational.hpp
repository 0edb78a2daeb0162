#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pforms {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator.
/// Every scalar value in the library is one of these; there is no floating
/// point anywhere in the computation pipeline.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long num) : value_(static_cast<long>(num)) {}
  Rational(int num) : value_(static_cast<long>(num)) {}

  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  explicit Rational(const mpz_class& num) : value_(num) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Parses "num" or "num/den" with optional leading '-'. Throws on anything
  /// else, including "1/0" and embedded whitespace.
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::size_t slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_integer_token(num_part))
      throw std::invalid_argument("Rational: bad numerator in '" + text + "'");
    if (slash == std::string::npos) return Rational(mpz_class(num_part));
    const std::string den_part = text.substr(slash + 1);
    if (!is_integer_token(den_part) || den_part[0] == '-')
      throw std::invalid_argument("Rational: bad denominator in '" + text + "'");
    mpz_class den(den_part);
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    return Rational(mpz_class(num_part), den);
  }

  /// Canonical rendering: "num" when the denominator is 1, else "num/den".
  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return value_ == 0; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
  static bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  mpq_class value_;
};

inline mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace pforms
