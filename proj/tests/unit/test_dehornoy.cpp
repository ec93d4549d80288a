#include "doctest.h"
#include "helpers.hpp"

#include "braidwalk/error.hpp"
#include "braidwalk/dehornoy.hpp"
#include "braidwalk/garside.hpp"

using namespace braidwalk;
using namespace braidwalk::dehornoy;
using testing_util::from;
using testing_util::W;

TEST_CASE("handle_reduce examples") {
  CHECK(handle_reduce(W("1 -1", 2)).empty());
  const auto r = handle_reduce(W("1 2 -1", 3));
  CHECK(is_handle_free(r));
  CHECK(garside::equals(r, W("-2 1 2", 3)));
  CHECK(to_string(handle_reduce(W("2 -2 1", 3))) == "1");
}

TEST_CASE("handle_reduce budget is reported") {
  CHECK_THROWS_AS(handle_reduce(W("1 2 2 -1 -1 2 1 -2 -2", 3), 1), BudgetExceeded);
}

TEST_CASE("order_sign examples") {
  CHECK(order_sign(W("1 -2", 3)) == OrderSign::kPositive);
  CHECK(order_sign(W("-1 2", 3)) == OrderSign::kNegative);
  CHECK(order_sign(W("1 -1", 2)) == OrderSign::kZero);
}

TEST_CASE("compare examples") {
  CHECK(compare(W("1", 2), full_twist_power(2, 1)) == Comparison::kLess);
  const auto b = W("1 -2 2 2 -1", 3);
  CHECK(compare(b, b) == Comparison::kEqual);
  CHECK(compare(BraidWord(2), W("-1", 2)) == Comparison::kGreater);
  CHECK_THROWS_AS(compare(W("1", 2), W("1", 3)), StrandMismatch);
}

TEST_CASE("dehornoy_floor examples") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = -3; k <= 3; ++k) {
      CHECK(dehornoy_floor(full_twist_power(n, k)).floor == k);
    }
  }
  CHECK(dehornoy_floor(W("1", 2)).floor == 0);
  CHECK(dehornoy_floor(W("-1", 2)).floor == -1);
}

TEST_CASE("property: handle reduction is sound and sign-readable") {
  oracle::Gen gen(301);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 5));
    const auto w = from(gen.word(n, static_cast<int>(gen.uniform(0, 14))), n);
    const auto r = handle_reduce(w);
    CHECK(is_handle_free(r));
    CHECK(garside::equals(r, w));
    // In a handle-free word the lowest index occurs with one sign only.
    int lowest = n;
    for (const Letter x : r.letters()) {
      lowest = std::min(lowest, std::abs(x));
    }
    int pos = 0;
    int neg = 0;
    for (const Letter x : r.letters()) {
      if (x == lowest) {
        ++pos;
      } else if (x == -lowest) {
        ++neg;
      }
    }
    CHECK((pos == 0 || neg == 0));
    const auto s = order_sign(w);
    CHECK((s == OrderSign::kZero) == garside::left_normal_form(w).is_trivial());
  }
}

TEST_CASE("property: order is antisymmetric, transitive and left-invariant") {
  oracle::Gen gen(302);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 4));
    const auto a = from(gen.word(n, 6), n);
    const auto b = from(gen.word(n, 6), n);
    const auto c = from(gen.word(n, 6), n);
    const auto g = from(gen.word(n, 6), n);
    const auto ab = compare(a, b);
    CHECK(static_cast<int>(compare(b, a)) == -static_cast<int>(ab));
    CHECK(compare(compose(g, a), compose(g, b)) == ab);
    const auto bc = compare(b, c);
    if (ab == Comparison::kLess && bc == Comparison::kLess) {
      CHECK(compare(a, c) == Comparison::kLess);
    }
    if (ab == Comparison::kGreater && bc == Comparison::kGreater) {
      CHECK(compare(a, c) == Comparison::kGreater);
    }
  }
}

TEST_CASE("property: positive words are sigma-positive or trivial") {
  oracle::Gen gen(303);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 5));
    const auto w = from(gen.positive_word(n, static_cast<int>(gen.uniform(1, 10))), n);
    CHECK(order_sign(w) == OrderSign::kPositive);
  }
}

TEST_CASE("property: floor brackets the element and translates under the full twist") {
  oracle::Gen gen(304);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 4));
    const auto w = from(gen.word(n, static_cast<int>(gen.uniform(0, 12))), n);
    const long long m = dehornoy_floor(w).floor;
    CHECK(compare(full_twist_power(n, m), w) != Comparison::kGreater);
    CHECK(compare(w, full_twist_power(n, m + 1)) == Comparison::kLess);
    const long long k = gen.uniform(-3, 3);
    CHECK(dehornoy_floor(compose(full_twist_power(n, k), w)).floor == k + m);
    CHECK(dehornoy_floor(w, FloorBracket::kWordLength).floor == m);
    CHECK(dehornoy_floor(garside::left_normal_form(w)).floor == m);
  }
}
