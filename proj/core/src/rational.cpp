#include "braidwalk/rational.hpp"

#include <cctype>

#include "braidwalk/error.hpp"

namespace braidwalk {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    i = 1;
  }
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (s[0] == '+') {
    s.remove_prefix(1);
  }
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  BigInt num = parse_integer(num_text);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text)) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) {
      throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  // round(|v| * scale) = floor(|v| * scale + 1/2)
  Rational scaled = magnitude * Rational(scale) + Rational(1, 2);
  BigInt rounded = scaled.get_num() / scaled.get_den();
  BigInt whole = rounded / scale;
  BigInt frac = rounded % scale;
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

}  // namespace braidwalk
