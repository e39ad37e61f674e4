#include "ehrhart/rational.hpp"

#include <limits>

#include "ehrhart/error.hpp"

namespace ehrhart {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DimensionDeficient: return "DimensionDeficient";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OriginNotInterior: return "OriginNotInterior";
    case Errc::ZeroDilation: return "ZeroDilation";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DualNotLattice: return "DualNotLattice";
    case Errc::NonIntegerNormal: return "NonIntegerNormal";
    case Errc::NonIntegerDelta: return "NonIntegerDelta";
    case Errc::GenerationExhausted: return "GenerationExhausted";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "floor_div");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "ceil_div");
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::int64_t to_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (z < lo || z > hi) {
    throw Error(Errc::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
  }
  return std::stoll(z.get_str());
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const { return floor_div(num(), den()); }
Integer Rational::ceil() const { return ceil_div(num(), den()); }

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(Errc::ParseError, "bad denominator in '" + std::string(text) + "'");
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace ehrhart
