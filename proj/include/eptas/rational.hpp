#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eptas {

/// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
/// terms, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses `INT` or `INT/POSINT`. Returns nullopt on malformed input or a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Prints `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
bool is_integer(const Rational& value);

/// base^exponent for any integer exponent (base must be nonzero if exponent < 0).
Rational pow(const Rational& base, long exponent);

/// Rational or +infinity. Infinity only ever arises from rounding.
class ExtendedRational {
 public:
  ExtendedRational() : value_(Rational(0)) {}
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static ExtendedRational infinity() {
    ExtendedRational e;
    e.value_.reset();
    return e;
  }

  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
  [[nodiscard]] bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  [[nodiscard]] const Rational& value() const { return *value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b) {
    if (a.is_infinite()) {
      return b.is_infinite() ? std::strong_ordering::equal
                             : std::strong_ordering::greater;
    }
    if (b.is_infinite()) return std::strong_ordering::less;
    const int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::optional<Rational> value_;
};

std::string to_string(const ExtendedRational& value);
std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

}  // namespace eptas
