#include "braidwalk/laurent.hpp"

#include <algorithm>

#include "braidwalk/error.hpp"

namespace braidwalk {

LaurentPolynomial::LaurentPolynomial(std::vector<BigInt> coefficients, long long low_degree)
    : coefficients_(std::move(coefficients)), low_(low_degree) {
  trim();
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& c, long long degree) {
  return LaurentPolynomial({c}, degree);
}

void LaurentPolynomial::trim() {
  std::size_t first = 0;
  while (first < coefficients_.size() && coefficients_[first] == 0) {
    ++first;
  }
  if (first == coefficients_.size()) {
    coefficients_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coefficients_.size();
  while (coefficients_[last - 1] == 0) {
    --last;
  }
  coefficients_ = std::vector<BigInt>(coefficients_.begin() + static_cast<std::ptrdiff_t>(first),
                                      coefficients_.begin() + static_cast<std::ptrdiff_t>(last));
  low_ += static_cast<long long>(first);
}

BigInt LaurentPolynomial::coefficient(long long degree) const {
  if (is_zero() || degree < low_ || degree > high_degree()) {
    return 0;
  }
  return coefficients_[static_cast<std::size_t>(degree - low_)];
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  if (is_zero()) {
    return o;
  }
  if (o.is_zero()) {
    return *this;
  }
  const long long lo = std::min(low_, o.low_);
  const long long hi = std::max(high_degree(), o.high_degree());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (long long d = lo; d <= hi; ++d) {
    c[static_cast<std::size_t>(d - lo)] = coefficient(d) + o.coefficient(d);
  }
  return LaurentPolynomial(std::move(c), lo);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  std::vector<BigInt> c(coefficients_);
  for (auto& x : c) {
    x = -x;
  }
  return LaurentPolynomial(std::move(c), low_);
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  if (is_zero() || o.is_zero()) {
    return {};
  }
  std::vector<BigInt> c(coefficients_.size() + o.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < o.coefficients_.size(); ++j) {
      c[i + j] += coefficients_[i] * o.coefficients_[j];
    }
  }
  return LaurentPolynomial(std::move(c), low_ + o.low_);
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) {
    throw Error("division by the zero polynomial");
  }
  if (is_zero()) {
    return {};
  }
  // Long division on the coefficient sequences from the top.
  std::vector<BigInt> rem(coefficients_);
  const auto& d = divisor.coefficients_;
  if (rem.size() < d.size()) {
    throw Error("polynomial division is not exact");
  }
  std::vector<BigInt> q(rem.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + d.size() - 1];
    if (top % d.back() != 0) {
      throw Error("polynomial division is not exact");
    }
    q[k] = top / d.back();
    if (q[k] != 0) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        rem[k + j] -= q[k] * d[j];
      }
    }
  }
  for (const auto& r : rem) {
    if (r != 0) {
      throw Error("polynomial division is not exact");
    }
  }
  return LaurentPolynomial(std::move(q), low_ - divisor.low_);
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) {
    return {};
  }
  const long long span = high_degree() - low_;
  std::vector<BigInt> c(coefficients_);
  if (c.back() < 0) {
    for (auto& x : c) {
      x = -x;
    }
  }
  return LaurentPolynomial(std::move(c), -(span / 2));
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  if (is_zero()) {
    return {};
  }
  std::vector<BigInt> c(coefficients_.rbegin(), coefficients_.rend());
  return LaurentPolynomial(std::move(c), -high_degree());
}

Rational LaurentPolynomial::evaluate(const Rational& t) const {
  if (is_zero()) {
    return Rational(0);
  }
  // Horner on the coefficient sequence, then multiply by t^low.
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * t + Rational(*it);
  }
  Rational scale(1);
  const Rational base = low_ >= 0 ? t : Rational(Rational(1) / t);
  for (long long k = 0; k < (low_ >= 0 ? low_ : -low_); ++k) {
    scale *= base;
  }
  return acc * scale;
}

std::string LaurentPolynomial::serialize() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (coefficients_[j] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += ',';
    }
    out += coefficients_[j].get_str() + ":" + std::to_string(low_ + static_cast<long long>(j));
  }
  return out;
}

std::string LaurentPolynomial::pretty() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t j = coefficients_.size(); j-- > 0;) {
    const BigInt& c = coefficients_[j];
    if (c == 0) {
      continue;
    }
    const long long d = low_ + static_cast<long long>(j);
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || d == 0) {
      out += mag.get_str();
    }
    if (d != 0) {
      out += "t";
      if (d != 1) {
        out += "^" + std::to_string(d);
      }
    }
  }
  return out;
}

}  // namespace braidwalk
