#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace polarcut {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed). Throws
/// Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

/// A rational extended by +inf and -inf, used for optimal values that may be
/// unbounded (subproblem values, support functions).
class ExtendedRational {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity };

  ExtendedRational() = default;
  ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT

  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInfinity); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInfinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_plus_infinity() const noexcept { return kind_ == Kind::PlusInfinity; }
  bool is_minus_infinity() const noexcept { return kind_ == Kind::MinusInfinity; }

  /// Finite value; throws Error{PreconditionViolated} when infinite.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::string to_string(const ExtendedRational& value);

}  // namespace polarcut
