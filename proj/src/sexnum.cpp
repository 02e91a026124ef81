#include "babylon/sexnum.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "babylon/error.hpp"

namespace babylon {

namespace {

constexpr unsigned kBase = 60;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorKind::MalformedNumeral, "'" + std::string(text) + "': " + std::string(why));
}

// Parses a non-empty run of comma separated groups.
std::vector<std::uint8_t> parse_groups(std::string_view whole, std::string_view part) {
  std::vector<std::uint8_t> digits;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = part.find(',', pos);
    const std::string_view group =
        part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (group.empty()) malformed(whole, "empty digit group");
    if (group.size() > 2) malformed(whole, "digit group longer than two characters");
    unsigned value = 0;
    for (char c : group) {
      if (c < '0' || c > '9') malformed(whole, std::string("unexpected character '") + c + "'");
      value = value * 10 + static_cast<unsigned>(c - '0');
    }
    if (value >= kBase) malformed(whole, "digit group " + std::string(group) + " exceeds 59");
    digits.push_back(static_cast<std::uint8_t>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return digits;
}

BigInt digits_to_int(const std::vector<std::uint8_t>& digits) {
  BigInt n = 0;
  for (auto d : digits) n = n * kBase + d;
  return n;
}

BigInt pow60(unsigned exponent) {
  BigInt p = 1;
  for (unsigned i = 0; i < exponent; ++i) p *= kBase;
  return p;
}

std::vector<std::uint8_t> integer_digits(BigInt n) {
  std::vector<std::uint8_t> out;
  if (n == 0) return {0};
  while (n > 0) {
    out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(n % kBase)));
    n /= kBase;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void append_groups(std::string& out, const std::vector<std::uint8_t>& digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
}

BigInt strip_factor(BigInt n, unsigned p, BigInt& removed) {
  while (n % p == 0) {
    n /= p;
    removed *= p;
  }
  return n;
}

}  // namespace

SexValue::SexValue(const BigInt& n) : value_(n) {
  if (n < 0) throw Error(ErrorKind::NegativeResult, "negative integer " + n.str());
}

SexValue::SexValue(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  value_ = den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
  if (value_ < 0) throw Error(ErrorKind::NegativeResult, "negative fraction " + value_.str());
}

SexValue SexValue::from_rational(const Rational& r) {
  if (r < 0) throw Error(ErrorKind::NegativeResult, "negative value " + r.str());
  return SexValue(r);
}

std::string SexValue::to_string() const {
  if (has_finite_expansion(*this)) return to_sexagesimal(*this);
  return to_sexagesimal(SexValue(numerator())) + "/" + to_sexagesimal(SexValue(denominator()));
}

SexValue operator+(const SexValue& a, const SexValue& b) { return SexValue(a.value_ + b.value_); }

SexValue operator-(const SexValue& a, const SexValue& b) {
  if (b.value_ > a.value_) {
    throw Error(ErrorKind::NegativeResult, a.to_string() + " - " + b.to_string() + " is negative");
  }
  return SexValue(a.value_ - b.value_);
}

SexValue operator*(const SexValue& a, const SexValue& b) { return SexValue(a.value_ * b.value_); }

SexValue operator/(const SexValue& a, const SexValue& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, a.to_string() + " / 0");
  return SexValue(a.value_ / b.value_);
}

std::strong_ordering operator<=>(const SexValue& a, const SexValue& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const SexValue& v) { return os << v.to_string(); }

std::string SexNumeral::to_string() const {
  std::string out;
  append_groups(out, integer_digits);
  if (notation == Notation::absolute && !fraction_digits.empty()) {
    out += ';';
    append_groups(out, fraction_digits);
  }
  return out;
}

SexValue parse_sexagesimal(std::string_view text, Notation default_notation) {
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorKind::EmptyInput, "empty numeral");

  const std::size_t point = body.find(';');
  if (point == std::string_view::npos) {
    const auto digits = parse_groups(body, body);
    const BigInt n = digits_to_int(digits);
    if (default_notation == Notation::absolute || n == 0) return SexValue(n);
    // Floating: shift so the leading nonzero digit sits in the units place.
    const auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
    const auto places = static_cast<unsigned>(digits.end() - first - 1);
    return SexValue(n, pow60(places));
  }

  if (body.find(';', point + 1) != std::string_view::npos) malformed(body, "more than one ';'");
  const auto whole = parse_groups(body, body.substr(0, point));
  const auto frac = parse_groups(body, body.substr(point + 1));
  BigInt num = digits_to_int(whole) * pow60(static_cast<unsigned>(frac.size())) + digits_to_int(frac);
  return SexValue(num, pow60(static_cast<unsigned>(frac.size())));
}

FloatingNumeral parse_floating(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorKind::EmptyInput, "empty numeral");
  const std::size_t point = body.find(';');
  auto digits = parse_groups(body, body.substr(0, point));
  if (point != std::string_view::npos) {
    if (body.find(';', point + 1) != std::string_view::npos) malformed(body, "more than one ';'");
    const auto frac = parse_groups(body, body.substr(point + 1));
    digits.insert(digits.end(), frac.begin(), frac.end());
  }
  const auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
  const auto last = std::find_if(digits.rbegin(), digits.rend(), [](auto d) { return d != 0; }).base();
  if (first == digits.end()) return {};
  return {{first, last}};
}

SexValue FloatingNumeral::at(int exponent) const {
  if (digits.empty()) return SexValue{};
  const SexValue mantissa(digits_to_int(digits), pow60(static_cast<unsigned>(digits.size() - 1)));
  return scale_by_sixty(mantissa, exponent);
}

SexNumeral render_sexagesimal(const SexValue& v, Notation notation) {
  if (!has_finite_expansion(v)) {
    throw Error(ErrorKind::NonTerminatingExpansion,
                v.numerator().str() + "/" + v.denominator().str() + " has no finite base-60 expansion");
  }
  const BigInt num = v.numerator();
  const BigInt den = v.denominator();

  SexNumeral out;
  out.integer_digits = integer_digits(num / den);
  BigInt rem = num % den;
  while (rem != 0) {
    rem *= kBase;
    out.fraction_digits.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(rem / den)));
    rem %= den;
  }

  if (notation == Notation::floating) {
    std::vector<std::uint8_t> all = out.integer_digits;
    all.insert(all.end(), out.fraction_digits.begin(), out.fraction_digits.end());
    const auto first = std::find_if(all.begin(), all.end(), [](auto d) { return d != 0; });
    const auto last = std::find_if(all.rbegin(), all.rend(), [](auto d) { return d != 0; }).base();
    SexNumeral floating{{}, {}, Notation::floating};
    if (first == all.end()) {
      floating.integer_digits = {0};
    } else {
      floating.integer_digits.assign(first, last);
    }
    return floating;
  }
  return out;
}

std::string to_sexagesimal(const SexValue& v) { return render_sexagesimal(v).to_string(); }

SexValue scale_by_sixty(const SexValue& v, int exponent) {
  const BigInt p = pow60(static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? v / SexValue(p) : v * SexValue(p);
}

SexValue parse_value(std::string_view text) {
  const std::string_view body = trim(text);
  const std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) return parse_sexagesimal(body);
  return parse_sexagesimal(body.substr(0, slash)) / parse_sexagesimal(body.substr(slash + 1));
}

std::string_view to_string(Op op) noexcept {
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
  }
  return "?";
}

SexValue combine(Op op, const SexValue& a, const SexValue& b) {
  switch (op) {
    case Op::add: return a + b;
    case Op::sub: return a - b;
    case Op::mul: return a * b;
    case Op::div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown operation");
}

SexValue reciprocal(const SexValue& v) {
  if (v.is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of 0");
  return SexValue(v.denominator(), v.numerator());
}

bool has_finite_expansion(const SexValue& v) {
  return classify_regular(v.denominator()).is_regular();
}

Regularity classify_regular(const BigInt& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "classify_regular needs n >= 1, got " + n.str());
  Regularity r;
  BigInt rest = n;
  for (unsigned p : {2u, 3u, 5u}) rest = strip_factor(rest, p, r.smooth_part);
  r.rough_part = rest;
  r.classification = rest == 1 ? Regularity::Class::regular : Regularity::Class::irregular;
  return r;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  BigInt r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

SexValue sqrt_exact(const SexValue& v) {
  const auto num = exact_isqrt(v.numerator());
  const auto den = num ? exact_isqrt(v.denominator()) : std::nullopt;
  if (!num || !den) throw Error(ErrorKind::NotAPerfectSquare, "sqrt(" + v.to_string() + ") is irrational");
  return SexValue(*num, *den);
}

std::vector<PrimePower> factorize(const BigInt& n, std::uint64_t trial_limit) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorize needs n >= 1, got " + n.str());
  std::vector<PrimePower> out;
  BigInt rest = n;
  auto take = [&](std::uint64_t p) {
    if (rest % p != 0) return;
    PrimePower pp{BigInt(p), 0};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  };
  take(2);
  std::uint64_t p = 3;
  for (; p <= trial_limit && BigInt(p) * p <= rest; p += 2) take(p);
  if (rest > 1) {
    // Any composite cofactor would have a prime factor <= trial_limit.
    if (BigInt(p) * p <= rest) {
      throw Error(ErrorKind::InvalidArgument, "cannot certify cofactor " + rest.str() + " by trial division");
    }
    out.push_back({rest, 1});
  }
  return out;
}

SexValue sqrt_by_factorization(const SexValue& v) {
  auto half_root = [&](const BigInt& n) {
    BigInt root = 1;
    for (const auto& [prime, exponent] : factorize(n)) {
      if (exponent % 2 != 0) {
        throw Error(ErrorKind::NotAPerfectSquare, "sqrt(" + v.to_string() + ") is irrational");
      }
      root *= boost::multiprecision::pow(prime, exponent / 2);
    }
    return root;
  };
  if (v.is_zero()) return SexValue{};
  return SexValue(half_root(v.numerator()), half_root(v.denominator()));
}

}  // namespace babylon
