#pragma once

#include <string>
#include <vector>

#include "braidwalk/rational.hpp"

namespace braidwalk {

// Integer Laurent polynomial sum c_j t^{low + j}; always trimmed, so the
// zero polynomial has no coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::vector<BigInt> coefficients, long long low_degree);
  static LaurentPolynomial constant(const BigInt& c);
  static LaurentPolynomial monomial(const BigInt& c, long long degree);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  long long low_degree() const noexcept { return low_; }
  long long high_degree() const noexcept {
    return low_ + static_cast<long long>(coefficients_.size()) - 1;
  }
  BigInt coefficient(long long degree) const;
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;

  // Exact quotient; throws Error when `divisor` does not divide.
  LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

  // Shifted so the degrees sit as evenly around zero as possible (low =
  // -floor(span / 2)) with positive top coefficient. Equal normalizations
  // mean equal up to units +-t^k.
  LaurentPolynomial normalized() const;
  // Coefficients reversed in t <-> 1/t.
  LaurentPolynomial reflected() const;

  Rational evaluate(const Rational& t) const;

  // "c:d" pairs lowest degree first, comma separated; "0" for zero.
  std::string serialize() const;
  // Human-readable, e.g. "t - 3 + t^-1".
  std::string pretty() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coefficients_;
  long long low_ = 0;
};

}  // namespace braidwalk
