#include "circuitlab/rational.hpp"

#include "circuitlab/error.hpp"

#include <cctype>
#include <ostream>

namespace circuitlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::string digits(s);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size())
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  if (digits[0] == '+')
    digits.erase(0, 1);
  return BigInt(digits, 10);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(s, text));
  const BigInt num = parse_integer(trim(s.substr(0, slash)), text);
  const BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
  if (den == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.to_string();
}

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotInPolytope: return "NotInPolytope";
  case ErrorCode::ZeroVector: return "ZeroVector";
  case ErrorCode::Unbounded: return "Unbounded";
  case ErrorCode::NotACircuit: return "NotACircuit";
  case ErrorCode::NoStep: return "NoStep";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::IncompleteDescription: return "IncompleteDescription";
  case ErrorCode::DepthLimit: return "DepthLimit";
  case ErrorCode::InvariantViolated: return "InvariantViolated";
  case ErrorCode::ConstructionFailed: return "ConstructionFailed";
  case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

} // namespace circuitlab
