#include "pba/rational.hpp"

#include <cctype>

#include "pba/error.hpp"

namespace pba {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  boost::multiprecision::mpz_int value{std::string(s)};
  return negative ? boost::multiprecision::mpz_int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+')
    throw Error(ErrorKind::ParseError,
                "not a rational literal: '" + std::string(text) + "'");
  const auto den = parse_integer(den_text);
  if (den == 0)
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num_text)) / Rational(den);
}

std::string format_rational(const Rational& q) { return q.str(); }

}  // namespace pba
