#include "polarcut/rational.hpp"

#include "polarcut/error.hpp"

#include <cctype>

namespace polarcut {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyEpigraph: return "EmptyEpigraph";
    case Errc::ZeroCertificate: return "ZeroCertificate";
    case Errc::StrategyUnbounded: return "StrategyUnbounded";
    case Errc::Unbounded: return "Unbounded";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InfeasibleCandidate: return "InfeasibleCandidate";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NoIncumbent: return "NoIncumbent";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw Error(Errc::ParseError, "malformed rational '" + std::string(whole) + "'");
  for (char ch : body) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(Errc::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  // GMP rejects a leading '+'.
  if (digits.front() == '+') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(trim(s.substr(0, slash)), text);
  const Integer den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  // The two-argument constructor canonicalizes.
  return Rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw Error(Errc::PreconditionViolated, "value of an infinite quantity");
  return value_;
}

std::partial_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  auto rank = [](ExtendedRational::Kind k) {
    switch (k) {
      case ExtendedRational::Kind::MinusInfinity: return -1;
      case ExtendedRational::Kind::Finite: return 0;
      case ExtendedRational::Kind::PlusInfinity: return 1;
    }
    return 0;
  };
  if (a.kind_ == b.kind_ && a.kind_ == ExtendedRational::Kind::Finite) {
    if (a.value_ < b.value_) return std::partial_ordering::less;
    if (a.value_ > b.value_) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return rank(a.kind_) <=> rank(b.kind_);
}

std::string to_string(const ExtendedRational& value) {
  switch (value.kind()) {
    case ExtendedRational::Kind::PlusInfinity: return "inf";
    case ExtendedRational::Kind::MinusInfinity: return "-inf";
    case ExtendedRational::Kind::Finite: break;
  }
  return to_string(value.value());
}

}  // namespace polarcut
