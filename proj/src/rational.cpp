#include "compmat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace compmat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

bool Rational::is_valid_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return all_digits(text);
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  return den.find_first_not_of('0') != std::string_view::npos;
}

Rational Rational::parse(std::string_view text) {
  if (!is_valid_literal(text)) {
    throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  }
  mpq_class v;
  v.set_str(std::string(text), 10);
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace compmat
