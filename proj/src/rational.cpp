#include "eptas/rational.hpp"

#include <cctype>

namespace eptas {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& base, long exponent) {
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const ExtendedRational& value) {
  return value.is_infinite() ? std::string("inf") : to_string(value.value());
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
  return os << to_string(value);
}

}  // namespace eptas
