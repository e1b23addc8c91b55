#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace compmat {

/// Exact rational number backed by GMP. Always canonical: the denominator is
/// positive and coprime to the numerator, and zero is stored as 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses `[-]?digits(/digits)?`. Throws std::invalid_argument on anything
  /// else, including a zero denominator.
  static Rational parse(std::string_view text);

  /// True iff `text` matches the rational grammar accepted by parse().
  static bool is_valid_literal(std::string_view text);

  std::string str() const { return value_.get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  Rational abs() const { return Rational(::abs(value_)); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_{0};
};

}  // namespace compmat
