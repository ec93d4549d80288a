#include "doctest.h"
#include "helpers.hpp"

#include "braidwalk/error.hpp"
#include "braidwalk/exact_linalg.hpp"
#include "braidwalk/laurent.hpp"

using namespace braidwalk;
using testing_util::Q;

namespace {

LaurentPolynomial poly(std::vector<long> coeffs, long long low) {
  std::vector<BigInt> c;
  for (const long x : coeffs) {
    c.emplace_back(x);
  }
  return LaurentPolynomial(std::move(c), low);
}

linalg::IntMatrix random_matrix(oracle::Gen& gen, int size, long range) {
  linalg::IntMatrix m(size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      m.at(i, j) = gen.uniform(-range, range);
    }
  }
  return m;
}

// det(V - tV^T) at a rational point by the oracle's elimination.
mpq_class det_at(const linalg::IntMatrix& v, const mpq_class& t) {
  oracle::Matrix m(static_cast<std::size_t>(v.size()), std::vector<mpq_class>(v.size()));
  for (int i = 0; i < v.size(); ++i) {
    for (int j = 0; j < v.size(); ++j) {
      m[i][j] = mpq_class(static_cast<long>(v.at(i, j))) - t * static_cast<long>(v.at(j, i));
    }
  }
  return oracle::determinant(m);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Q(1, 2));
  CHECK(parse_rational("-2") == Q(-2));
  CHECK(to_string(Q(-3, 9)) == "-1/3");
  CHECK(to_string(Q(4)) == "4");
  CHECK(to_decimal(Q(1, 3)) == "0.333333");
  CHECK(to_decimal(Q(-2, 3), 2) == "-0.67");
  CHECK(floor(Q(-1, 2)) == -1);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("Laurent polynomial arithmetic") {
  const auto a = poly({1, -1, 1}, -1);
  CHECK(a.low_degree() == -1);
  CHECK(a.high_degree() == 1);
  CHECK(a.pretty() == "t - 1 + t^-1");
  CHECK((a - a).is_zero());
  CHECK((a * LaurentPolynomial::monomial(1, 2)).low_degree() == 1);
  const auto prod = a * poly({1, -3, 1}, -1);
  CHECK(prod.divide_exact(a) == poly({1, -3, 1}, -1));
  CHECK(poly({0, 0, 2, 0}, -3) == LaurentPolynomial::monomial(2, -1));
  CHECK(poly({-1, 1, -1}, 4).normalized() == a);
  CHECK(a.evaluate(Q(2)) == Q(3, 2));
  CHECK(LaurentPolynomial().serialize() == "0");
  CHECK(poly({1, 2}, 0).reflected() == poly({2, 1}, -1));
}

TEST_CASE("symmetric inertia on known forms") {
  linalg::IntMatrix hyperbolic(2);
  hyperbolic.at(0, 1) = 1;
  hyperbolic.at(1, 0) = 1;
  const auto h = linalg::symmetric_inertia(hyperbolic);
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK(h.zero == 0);

  linalg::IntMatrix e8(8);
  // E8 Cartan matrix (positive definite).
  for (int i = 0; i < 8; ++i) {
    e8.at(i, i) = 2;
  }
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
  for (const auto& [i, j] : edges) {
    e8.at(i, j) = -1;
    e8.at(j, i) = -1;
  }
  CHECK(linalg::symmetric_signature(e8) == 8);

  linalg::IntMatrix zero(3);
  CHECK(linalg::symmetric_inertia(zero).zero == 3);
}

TEST_CASE("property: inertia agrees with leading principal minors on definite forms") {
  // A^T A + I is positive definite; its negative is negative definite.
  oracle::Gen gen(601);
  for (int trial = 0; trial < 50; ++trial) {
    const int size = static_cast<int>(gen.uniform(1, 7));
    const auto a = random_matrix(gen, size, 4);
    linalg::IntMatrix s(size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        long long acc = i == j ? 1 : 0;
        for (int k = 0; k < size; ++k) {
          acc += a.at(k, i) * a.at(k, j);
        }
        s.at(i, j) = acc;
      }
    }
    CHECK(linalg::symmetric_signature(s) == size);
    linalg::IntMatrix neg(size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        neg.at(i, j) = -s.at(i, j);
      }
    }
    CHECK(linalg::symmetric_signature(neg) == -size);
  }
}

TEST_CASE("property: inertia is invariant under integer congruence") {
  oracle::Gen gen(602);
  for (int trial = 0; trial < 100; ++trial) {
    const int size = static_cast<int>(gen.uniform(1, 6));
    auto s = random_matrix(gen, size, 3);
    s = s + s.transpose();
    const auto before = linalg::symmetric_inertia(s);
    // Unimodular P: identity plus one strictly upper entry.
    linalg::IntMatrix p(size);
    for (int i = 0; i < size; ++i) {
      p.at(i, i) = 1;
    }
    if (size > 1) {
      p.at(0, size - 1) = gen.uniform(-3, 3);
    }
    linalg::IntMatrix ps(size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        long long acc = 0;
        for (int k = 0; k < size; ++k) {
          for (int l = 0; l < size; ++l) {
            acc += p.at(k, i) * s.at(k, l) * p.at(l, j);
          }
        }
        ps.at(i, j) = acc;
      }
    }
    const auto after = linalg::symmetric_inertia(ps);
    CHECK(before.positive == after.positive);
    CHECK(before.negative == after.negative);
    CHECK(before.zero == after.zero);
    // Sign of det matches the parity of the negative count.
    oracle::Matrix m(static_cast<std::size_t>(size), std::vector<mpq_class>(size));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        m[i][j] = static_cast<long>(s.at(i, j));
      }
    }
    const mpq_class det = oracle::determinant(m);
    if (before.zero == 0) {
      CHECK(sgn(det) == (before.negative % 2 == 0 ? 1 : -1));
    } else {
      CHECK(det == 0);
    }
  }
}

TEST_CASE("property: Alexander determinant matches rational elimination pointwise") {
  oracle::Gen gen(603);
  for (int trial = 0; trial < 60; ++trial) {
    const int size = static_cast<int>(gen.uniform(0, 8));
    const auto v = random_matrix(gen, size, 5);
    const auto d = linalg::alexander_determinant(v);
    for (const mpq_class t : {mpq_class(0), mpq_class(3), mpq_class(-2, 7), mpq_class(11, 3)}) {
      CHECK(d.evaluate(t) == det_at(v, t));
    }
  }
}
