#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace braidwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long overloads; long is 64-bit on supported targets.
static_assert(sizeof(long) == sizeof(long long));

inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

// p / q in lowest terms; q must be nonzero.
inline Rational ratio(long long p, long long q = 1) {
  Rational r(to_big(p), to_big(q));
  r.canonicalize();
  return r;
}

// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Canonical text: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits = 6);

Rational abs(const Rational& value);

// Floor of p/q as an integer.
BigInt floor(const Rational& value);

}  // namespace braidwalk
