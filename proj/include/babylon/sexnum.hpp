#pragma once

// Exact nonnegative rationals with base-60 (sexagesimal) notation.
//
// Numerals use the conventional modern transcription: digit groups 0..59
// separated by ',', with an optional fraction point ';'. For example
// "10,0" is 600 and "0;0,6" is 6/3600 = 1/600.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace babylon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational, always reduced (zero is 0/1).
class SexValue {
 public:
  SexValue() = default;
  SexValue(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit SexValue(const BigInt& n);
  /// Throws DivisionByZero for den == 0 and NegativeResult for a negative quotient.
  SexValue(const BigInt& num, const BigInt& den);

  /// Throws NegativeResult if r < 0.
  static SexValue from_rational(const Rational& r);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& rational() const noexcept { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  /// Canonical text: sexagesimal when the expansion terminates, otherwise
  /// "n/d" with both integers written in sexagesimal.
  std::string to_string() const;

  friend SexValue operator+(const SexValue& a, const SexValue& b);
  /// Throws NegativeResult when b > a.
  friend SexValue operator-(const SexValue& a, const SexValue& b);
  friend SexValue operator*(const SexValue& a, const SexValue& b);
  /// Throws DivisionByZero.
  friend SexValue operator/(const SexValue& a, const SexValue& b);

  friend bool operator==(const SexValue& a, const SexValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const SexValue& a, const SexValue& b);

 private:
  explicit SexValue(Rational r) : value_(std::move(r)) {}

  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const SexValue& v);

enum class Notation { absolute, floating };

/// Rendered digit string. In floating notation only the significant digits
/// are kept (no fraction point, no leading or trailing zero groups) and
/// integer_digits holds all of them.
struct SexNumeral {
  std::vector<std::uint8_t> integer_digits;
  std::vector<std::uint8_t> fraction_digits;
  Notation notation = Notation::absolute;

  std::string to_string() const;
  friend bool operator==(const SexNumeral&, const SexNumeral&) = default;
};

/// Parses `group ("," group)* (";" group ("," group)*)?` with every group one
/// or two ASCII digits valued 0..59. Surrounding whitespace is ignored.
///
/// Without a ';' the absolute reading is an integer. The floating reading of
/// such a text places its leading nonzero digit in the units position, so
/// "10,0" and "10" both read as 10 (call scale_by_sixty to fix the
/// magnitude). A text containing ';' is always read absolutely.
SexValue parse_sexagesimal(std::string_view text,
                           Notation default_notation = Notation::absolute);

/// Floating reading with the magnitude left open: the significant digits,
/// leading and trailing zero groups dropped.
struct FloatingNumeral {
  std::vector<std::uint8_t> digits;

  /// The value with the leading digit in the 60^exponent place.
  SexValue at(int exponent) const;
  friend bool operator==(const FloatingNumeral&, const FloatingNumeral&) = default;
};

/// Same grammar as parse_sexagesimal; a ';' is accepted and ignored.
FloatingNumeral parse_floating(std::string_view text);

/// Throws NonTerminatingExpansion when the reduced denominator has a prime
/// factor other than 2, 3 or 5.
SexNumeral render_sexagesimal(const SexValue& v, Notation notation = Notation::absolute);

/// Shorthand for render_sexagesimal(v).to_string().
std::string to_sexagesimal(const SexValue& v);

/// Multiplies by 60^exponent (exponent may be negative).
SexValue scale_by_sixty(const SexValue& v, int exponent);

/// Inverse of SexValue::to_string: accepts a numeral or "numeral/numeral".
SexValue parse_value(std::string_view text);

enum class Op { add, sub, mul, div };

std::string_view to_string(Op op) noexcept;

SexValue combine(Op op, const SexValue& a, const SexValue& b);

/// 1/v. Throws DivisionByZero for v == 0.
SexValue reciprocal(const SexValue& v);

/// True when v has a terminating base-60 expansion.
bool has_finite_expansion(const SexValue& v);

struct Regularity {
  enum class Class { regular, irregular };

  Class classification = Class::regular;
  BigInt smooth_part{1};  // product of the 2s, 3s and 5s
  BigInt rough_part{1};   // cofactor coprime to 30

  bool is_regular() const noexcept { return classification == Class::regular; }
};

/// Splits n >= 1 into its {2,3,5}-smooth part and the rest.
/// Throws InvalidArgument for n < 1.
Regularity classify_regular(const BigInt& n);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// The exact integer root if n is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// Exact rational square root via integer roots of the reduced numerator and
/// denominator. Throws NotAPerfectSquare if the root is irrational.
SexValue sqrt_exact(const SexValue& v);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, ascending primes. n = 1 gives an
/// empty list. Throws InvalidArgument for n < 1, or when a cofactor is left
/// that trial division up to trial_limit cannot certify as prime.
std::vector<PrimePower> factorize(const BigInt& n, std::uint64_t trial_limit = 1'000'000);

/// Square root by halving the exponents of the factorizations of numerator
/// and denominator, e.g. 3,10,26,24 = 2^4 * 3^4 * 23^2 gives 2^2 * 3^2 * 23.
/// Throws NotAPerfectSquare if some exponent is odd.
SexValue sqrt_by_factorization(const SexValue& v);

}  // namespace babylon
