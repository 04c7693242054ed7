#include "rtp/rational.hpp"

#include <cctype>
#include <ostream>

#include "rtp/error.hpp"

namespace rtp {
namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

mpz_class parse_integer(std::string_view text) {
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!is_decimal_integer(num)) {
    throw ParseError("not an exact rational: '" + std::string(text) + "' (expected p or p/q)");
  }
  mpq_class value;
  if (slash == std::string_view::npos) {
    value = mpq_class(parse_integer(num));
  } else {
    const std::string_view den = body.substr(slash + 1);
    if (!is_decimal_integer(den) || den.front() == '-' || den.front() == '+') {
      throw ParseError("not an exact rational: '" + std::string(text) + "' (bad denominator)");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(parse_integer(num), d);
  }
  return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace rtp
