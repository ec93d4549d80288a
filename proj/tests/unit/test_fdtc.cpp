#include "doctest.h"
#include "helpers.hpp"

#include "braidwalk/dehornoy.hpp"
#include "braidwalk/fdtc.hpp"
#include "braidwalk/garside.hpp"

using namespace braidwalk;
using testing_util::from;
using testing_util::Q;
using testing_util::W;

namespace {

std::vector<std::pair<long long, long long>> growth(const BraidWord& w, long long k_max) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& s : floor_growth(w, k_max)) {
    out.emplace_back(s.power, s.floor);
  }
  return out;
}

using Growth = std::vector<std::pair<long long, long long>>;

}  // namespace

TEST_CASE("floor_growth examples") {
  CHECK(growth(full_twist_power(3, 1), 8) == Growth{{1, 1}, {2, 2}, {4, 4}, {8, 8}});
  CHECK(growth(W("1", 2), 8) == Growth{{1, 0}, {2, 1}, {4, 2}, {8, 4}});
  CHECK(growth(BraidWord(3), 4) == Growth{{1, 0}, {2, 0}, {4, 0}});
}

TEST_CASE("fdtc_bounds examples") {
  const auto a = fdtc_bounds(full_twist_power(3, 1), 8, Q(2));
  CHECK(a.lo == Q(3, 4));
  CHECK(a.hi == Q(5, 4));
  const auto b = fdtc_bounds(W("1", 2), 8, Q(2));
  CHECK(b.lo == Q(1, 4));
  CHECK(b.hi == Q(3, 4));
  CHECK(b.contains(Q(1, 2)));
  CHECK(fdtc_bounds(W("1 -2", 3), 16, Q(2)).contains(Q(0)));
}

TEST_CASE("fdtc_exact examples") {
  CHECK(fdtc_exact(full_twist_power(3, 1), 4, 64).exact == Q(1));
  CHECK(fdtc_exact(W("1", 2), 4, 64).exact == Q(1, 2));
  // Oracle: (s1 s2)^3 = Delta^2, so homogeneity forces 1/3.
  REQUIRE(garside::equals(power(W("1 2", 3), 3), full_twist_power(3, 1)));
  CHECK(fdtc_exact(W("1 2", 3), 6, 64, Q(1)).exact == Q(1, 3));
  CHECK(fdtc_exact(W("1 -2", 3), 10, 64).exact == Q(0));
}

TEST_CASE("fdtc_exact leaves exact empty when the bracket stays ambiguous") {
  // With D = 2 the k = 64 interval for s1 s2 is [19/64, 23/64], which also
  // holds 3/10.
  const auto est = fdtc_exact(W("1 2", 3), 10, 64, Q(2));
  CHECK_FALSE(est.exact);
  CHECK(est.interval.lo == Q(19, 64));
  CHECK(est.interval.hi == Q(23, 64));
  CHECK(est.power_used == 64);
}

TEST_CASE("genus_lower_bound_from_fdtc examples") {
  const auto d = full_twist_power(3, 1);
  CHECK(genus_lower_bound_from_fdtc(d, fdtc_exact(d, 10, 64)) == Q(1));
  const auto z = W("1 -2", 3);
  CHECK(genus_lower_bound_from_fdtc(z, fdtc_exact(z, 10, 64)) == Q(0));
  const auto d5 = full_twist_power(3, 5);
  CHECK(genus_lower_bound_from_fdtc(d5, fdtc_exact(d5, 10, 64)) == Q(5));
  // Without an exact value the endpoint nearest zero is used.
  const auto s = W("1 2", 3);
  CHECK(genus_lower_bound_from_fdtc(s, fdtc_exact(s, 10, 64, Q(2))) == Q(19, 64));
}

TEST_CASE("simplest and unique bounded rationals") {
  CHECK(simplest_rational_in(Q(19, 64), Q(23, 64)) == Q(1, 3));
  CHECK(simplest_rational_in(Q(-1, 4), Q(1, 4)) == Q(0));
  CHECK(simplest_rational_in(Q(-5, 4), Q(-9, 8)) == Q(-5, 4));
  CHECK(simplest_rational_in(Q(-23, 20), Q(-9, 8)) == Q(-8, 7));
  CHECK(unique_bounded_rational({Q(19, 64), Q(23, 64)}, 10) == std::nullopt);
  CHECK(unique_bounded_rational({Q(21, 64), Q(22, 64)}, 10) == Q(1, 3));
  CHECK(unique_bounded_rational({Q(1, 7), Q(1, 6)}, 5) == std::nullopt);
}

TEST_CASE("property: intervals for increasing k intersect and shrink as 2D/k") {
  oracle::Gen gen(401);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 4));
    const auto w = from(gen.reduced_word(n, static_cast<int>(gen.uniform(1, 6))), n);
    std::vector<RationalInterval> seen;
    for (long long k = 1; k <= 16; k *= 2) {
      const auto iv = fdtc_bounds(w, k, Q(2));
      CHECK(iv.width() == Q(4, k));
      for (const auto& prev : seen) {
        CHECK(prev.intersects(iv));
      }
      seen.push_back(iv);
    }
  }
}

TEST_CASE("property: exact FDTC is homogeneous and conjugation invariant") {
  const std::vector<BraidWord> words{full_twist_power(3, 1), W("1", 2), W("1 2", 3),
                                     W("1 -2", 3), W("1 1 2", 3), W("1 2 3", 4)};
  oracle::Gen gen(402);
  for (const auto& w : words) {
    const auto base = fdtc_exact(w, 10, 64, Q(1));
    REQUIRE(base.exact);
    for (const long long m : {2LL, 3LL}) {
      const auto pw = fdtc_exact(power(w, m), 10, 64, Q(1));
      if (pw.exact) {
        CHECK(*pw.exact == *base.exact * Q(m));
      }
    }
    const auto g = from(gen.word(w.strands(), 4), w.strands());
    const auto c = conjugate(g, w);
    const auto cc = fdtc_exact(c, 10, 64, Q(1));
    if (cc.exact) {
      CHECK(*cc.exact == *base.exact);
    }
    for (long long k = 1; k <= 16; k *= 2) {
      CHECK(fdtc_bounds(w, k, Q(2)).intersects(fdtc_bounds(c, k, Q(2))));
    }
    for (const long long k : {-1LL, 2LL}) {
      const auto shifted = fdtc_exact(compose(full_twist_power(w.strands(), k), w), 10, 64, Q(1));
      if (shifted.exact) {
        CHECK(*shifted.exact == *base.exact + Q(k));
      }
    }
  }
}

TEST_CASE("fdtc of a positive word is nonnegative") {
  oracle::Gen gen(403);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(gen.uniform(2, 4));
    const auto w = from(gen.positive_word(n, static_cast<int>(gen.uniform(1, 6))), n);
    CHECK(fdtc_bounds(w, 16, Q(2)).hi >= 0);
    CHECK(dehornoy::dehornoy_floor(w).floor >= 0);
  }
}
