#include "doctest.h"
#include "helpers.hpp"

#include "braidwalk/error.hpp"
#include "braidwalk/garside.hpp"

using namespace braidwalk;
using testing_util::from;
using testing_util::W;

namespace {

// Reduced Burau equality at two generic parameters.
bool burau_equal(const BraidWord& a, const BraidWord& b) {
  for (const mpq_class t : {mpq_class(17, 5), mpq_class(-7, 11)}) {
    if (oracle::reduced_burau(a.letters(), a.strands(), t) !=
        oracle::reduced_burau(b.letters(), b.strands(), t)) {
      return false;
    }
  }
  return true;
}

std::vector<BraidWord> all_words(int n, int max_len) {
  std::vector<BraidWord> out;
  std::vector<std::vector<Letter>> level{{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : level) {
      out.emplace_back(n, w);
      for (int i = 1; i < n; ++i) {
        for (const int x : {i, -i}) {
          auto e = w;
          e.push_back(x);
          next.push_back(std::move(e));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Burau oracle satisfies the braid relations") {
  const mpq_class t(17, 5);
  CHECK(oracle::reduced_burau({1, 2, 1}, 3, t) == oracle::reduced_burau({2, 1, 2}, 3, t));
  CHECK(oracle::reduced_burau({1, 3}, 4, t) == oracle::reduced_burau({3, 1}, 4, t));
  CHECK(oracle::reduced_burau({1, -1}, 3, t) == oracle::reduced_burau({}, 3, t));
  CHECK(oracle::reduced_burau({1, 2}, 3, t) != oracle::reduced_burau({2, 1}, 3, t));
}

TEST_CASE("left normal form examples") {
  const auto a = garside::left_normal_form(W("1", 3));
  CHECK(a.delta_power == 0);
  REQUIRE(a.factors.size() == 1);
  CHECK(to_string(a.factors[0].word()) == "1");

  const auto b = garside::left_normal_form(W("1 2 1", 3));
  CHECK(b.delta_power == 1);
  CHECK(b.factors.empty());

  // Oracle: Delta^-1 s1 s2 equals s1^-1 under Burau; then pin the form.
  const auto candidate = compose(inverse(half_twist(3)), W("1 2", 3));
  REQUIRE(burau_equal(candidate, W("-1", 3)));
  const auto c = garside::left_normal_form(W("-1", 3));
  CHECK(c.delta_power == -1);
  REQUIRE(c.factors.size() == 1);
  CHECK(to_string(c.factors[0].word()) == "1 2");
}

TEST_CASE("equals examples") {
  CHECK(garside::equals(W("1 2 1", 3), W("2 1 2", 3)));
  REQUIRE_FALSE(burau_equal(W("1 2", 3), W("2 1", 3)));
  CHECK_FALSE(garside::equals(W("1 2", 3), W("2 1", 3)));
  CHECK_THROWS_AS(garside::equals(W("1", 2), W("1", 3)), StrandMismatch);
  oracle::Gen gen(201);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 5));
    const auto b = from(gen.word(n, 10), n);
    const auto d = full_twist_power(n, 1);
    CHECK(garside::equals(compose(d, b), compose(b, d)));
  }
}

TEST_CASE("inf_sup examples") {
  CHECK(garside::inf_sup(full_twist_power(3, 1)) == std::pair<long long, long long>{2, 2});
  CHECK(garside::inf_sup(W("1", 3)) == std::pair<long long, long long>{0, 1});
  CHECK(garside::inf_sup(W("-1", 3)) == std::pair<long long, long long>{-1, 0});
}

TEST_CASE("are_conjugate examples") {
  const auto a = garside::are_conjugate(W("1", 3), W("2", 3));
  CHECK(a.conjugate);
  REQUIRE(a.witness);
  CHECK(garside::equals(conjugate(*a.witness, W("1", 3)), W("2", 3)));
  // Delta itself is a valid witness.
  CHECK(garside::equals(conjugate(half_twist(3), W("1", 3)), W("2", 3)));

  CHECK_FALSE(garside::are_conjugate(W("1", 2), W("-1", 2)).conjugate);

  const auto c = garside::are_conjugate(W("1 -2", 3), W("2 -1", 3));
  CHECK(c.conjugate);
  REQUIRE(c.witness);
  CHECK(garside::equals(conjugate(*c.witness, W("1 -2", 3)), W("2 -1", 3)));
  CHECK(garside::equals(conjugate(half_twist(3), W("1 -2", 3)), W("2 -1", 3)));

  CHECK_FALSE(garside::are_conjugate(W("1 1 1", 3), W("1 1 2", 3)).conjugate);
}

TEST_CASE("are_conjugate reports an exhausted budget as inconclusive") {
  // A pseudo-Anosov-looking element in B_4 has a super summit set bigger
  // than one element.
  CHECK_THROWS_AS(garside::are_conjugate(W("1 -2 3 1 -2", 4), W("-2 3 1 -2 1", 4), 1),
                  BudgetExceeded);
}

TEST_CASE("normal forms are left-weighted, canonical and faithful") {
  oracle::Gen gen(202);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 5));
    const auto w = from(gen.word(n, static_cast<int>(gen.uniform(0, 16))), n);
    const auto nf = garside::left_normal_form(w);
    for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      CHECK(garside::is_left_weighted(nf.factors[j], nf.factors[j + 1]));
    }
    for (const auto& f : nf.factors) {
      CHECK_FALSE(f.is_identity());
      CHECK_FALSE(f.is_delta());
    }
    const auto back = garside::to_word(nf);
    CHECK(garside::left_normal_form(back) == nf);
    if (n == 3) {
      CHECK(burau_equal(back, w));
    }
  }
}

TEST_CASE("normal form arithmetic agrees with word arithmetic") {
  oracle::Gen gen(203);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 5));
    const auto a = from(gen.word(n, 8), n);
    const auto b = from(gen.word(n, 8), n);
    const auto na = garside::left_normal_form(a);
    const auto nb = garside::left_normal_form(b);
    CHECK(garside::multiply(na, nb) == garside::left_normal_form(compose(a, b)));
    CHECK(garside::inverse(na) == garside::left_normal_form(inverse(a)));
    CHECK(garside::power(na, 3) == garside::left_normal_form(power(a, 3)));
    CHECK(garside::power(na, -2) == garside::left_normal_form(power(a, -2)));
  }
}

TEST_CASE("equals is a congruence on sampled triples") {
  oracle::Gen gen(204);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3;
    const auto a = from(gen.word(n, 6), n);
    // b: a rewritten by inserting a relator somewhere.
    auto letters = a.letters();
    const std::size_t at = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(letters.size())));
    const std::vector<Letter> relator{1, 2, 1, -2, -1, -2};
    letters.insert(letters.begin() + static_cast<long>(at), relator.begin(), relator.end());
    const BraidWord b(n, letters);
    const auto c = from(gen.word(n, 6), n);
    CHECK(garside::equals(a, b));
    CHECK(garside::equals(b, a));
    CHECK(garside::equals(compose(a, c), compose(b, c)));
    CHECK(garside::equals(compose(c, a), compose(c, b)));
  }
}

TEST_CASE("full twist conventions for n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Letter> cyc;
    for (int i = 1; i < n; ++i) {
      cyc.push_back(i);
    }
    const BraidWord c(n, cyc);
    CHECK(garside::equals(full_twist_power(n, 1), power(half_twist(n), 2)));
    CHECK(garside::equals(full_twist_power(n, 1), power(c, n)));
    CHECK(garside::equals(full_twist_power(n, 2), power(c, 2 * n)));
  }
}

TEST_CASE("Burau cross-oracle on all B3 words of length <= 3") {
  // The acceptance binary runs the full length <= 4 sweep.
  const auto words = all_words(3, 3);
  std::vector<garside::NormalForm> forms;
  for (const auto& w : words) {
    forms.push_back(garside::left_normal_form(w));
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if ((forms[i] == forms[j]) != burau_equal(words[i], words[j])) {
        ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("property: conjugates are recognised with verified witnesses") {
  oracle::Gen gen(205);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(gen.uniform(3, 4));
    const auto beta = from(gen.word(n, static_cast<int>(gen.uniform(1, 8))), n);
    const auto g = from(gen.word(n, static_cast<int>(gen.uniform(0, 6))), n);
    const auto other = conjugate(g, beta);
    const auto cert = garside::are_conjugate(beta, other);
    CHECK(cert.conjugate);
    REQUIRE(cert.witness);
    CHECK(garside::equals(conjugate(*cert.witness, beta), other));
    CHECK(exponent_sum(beta) == exponent_sum(other));
    // Super summit inf and sup are conjugacy invariants.
    const auto ssa = garside::super_summit_representative(garside::left_normal_form(beta));
    const auto ssb = garside::super_summit_representative(garside::left_normal_form(other));
    CHECK(ssa.element.inf() == ssb.element.inf());
    CHECK(ssa.element.sup() == ssb.element.sup());
  }
}
