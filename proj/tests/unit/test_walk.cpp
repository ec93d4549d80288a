#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "braidwalk/error.hpp"
#include "braidwalk/garside.hpp"
#include "braidwalk/measure.hpp"
#include "braidwalk/rng.hpp"
#include "braidwalk/walk.hpp"

using namespace braidwalk;
using testing_util::Q;
using testing_util::W;

namespace {

Measure coin() { return parse_measure("n=2\n1/2 1\n1/2 -1\n"); }

WalkConfig config_for(Measure m, long long steps, long long trials,
                      std::vector<std::string> functionals) {
  WalkConfig c;
  c.start = BraidWord(m.strands);
  c.measure = std::move(m);
  c.steps = steps;
  c.trials = trials;
  c.seed = 77;
  c.checkpoints = default_checkpoints(steps);
  c.functionals = std::move(functionals);
  return c;
}

}  // namespace

TEST_CASE("measure validation examples") {
  CHECK_NOTHROW(validate_measure(coin()));
  Measure bad_sum;
  bad_sum.strands = 3;
  bad_sum.atoms = {{W("1", 3), Q(1, 2), "1"}, {W("2", 3), Q(2, 5), "2"}};
  CHECK_THROWS_AS(validate_measure(bad_sum), ConfigError);
  Measure mixed;
  mixed.strands = 2;
  mixed.atoms = {{W("1", 2), Q(1, 2), "1"}, {W("2", 3), Q(1, 2), "2"}};
  CHECK_THROWS_AS(validate_measure(mixed), StrandMismatch);
  Measure negative;
  negative.strands = 2;
  negative.atoms = {{W("1", 2), Q(3, 2), "1"}, {W("-1", 2), Q(-1, 2), "-1"}};
  CHECK_THROWS_AS(validate_measure(negative), ConfigError);
  CHECK_THROWS_AS(parse_measure("n=3\n1/2 1\n1/3 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_measure("1/2 1\n1/2 2\n"), ParseError);
}

TEST_CASE("measure file round-trip") {
  const auto m = parse_measure("# comment\nn=3\n1/6 1\n1/6 -1\n1/6 2\n1/6 -2\n1/6 D2\n1/6 D2^-1\n");
  CHECK(m.strands == 3);
  REQUIRE(m.atoms.size() == 6);
  CHECK(m.atoms[4].word == full_twist_power(3, 1));
  CHECK(m.atoms[4].label == "D2");
  const auto again = parse_measure(format_measure(m));
  CHECK(format_measure(again) == format_measure(m));
}

TEST_CASE("splitmix64 reference values") {
  // Published reference output for seed 1234567.
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ULL);
  CHECK(g.next() == 3203168211198807973ULL);
  CHECK(substream_seed(5, 0) != substream_seed(5, 1));
  CHECK(substream_seed(5, 1) != substream_seed(6, 1));
}

TEST_CASE("atom frequencies lie within five standard deviations") {
  const auto m = parse_measure("n=3\n1/2 1\n1/4 2\n1/8 -1\n1/8 -2\n");
  AtomSampler sampler(m);
  SplitMix64 rng(20240611);
  std::vector<int> counts(m.atoms.size(), 0);
  const int draws = 10000;
  for (int j = 0; j < draws; ++j) {
    ++counts[sampler.draw(rng)];
  }
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    const double p = m.atoms[a].weight.get_d();
    const double sd = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(counts[a] - draws * p) <= 5 * sd);
  }
}

TEST_CASE("deterministic single-atom walk") {
  auto c = config_for(parse_measure("n=2\n1 1\n"), 6, 1, {"floor", "fdtc"});
  c.checkpoints = {6};
  const auto r = run_trials(c, FunctionalRegistry::standard());
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].k == 6);
  CHECK(r.records[0].length == 6);
  CHECK(r.records[0].values[0] == Q(3));
  CHECK(r.records[0].values[1] == Q(3));
}

TEST_CASE("coin walk exponent sum matches an independent coin-flip simulation") {
  const auto c = config_for(coin(), 64, 20, {"exponent_sum"});
  const auto r = run_trials(c, FunctionalRegistry::standard());
  const AtomSampler sampler(c.measure);
  for (long long trial = 0; trial < c.trials; ++trial) {
    // Oracle: draw the same substream directly; atom 0 is +1, atom 1 is -1.
    SplitMix64 rng(substream_seed(c.seed, static_cast<std::uint64_t>(trial)));
    long long e = 0;
    std::vector<long long> at_step(65, 0);
    for (long long k = 1; k <= 64; ++k) {
      e += sampler.draw(rng) == 0 ? 1 : -1;
      at_step[k] = e;
    }
    for (const auto& rec : r.records) {
      if (rec.trial == trial) {
        CHECK(rec.values[0] == Q(at_step[rec.k]));
      }
    }
  }
}

TEST_CASE("walks are deterministic and order independent") {
  const auto m = parse_measure("n=3\n1/6 1\n1/6 -1\n1/6 2\n1/6 -2\n1/6 D2\n1/6 D2^-1\n");
  auto c = config_for(m, 16, 6, {"exponent_sum", "floor", "signature"});
  const auto reg = FunctionalRegistry::standard();
  const auto a = run_trials(c, reg);
  const auto b = run_trials(c, reg);
  CHECK(a.records == b.records);
  c.threads = 4;
  const std::vector<long long> order{5, 3, 1, 0, 2, 4};
  const auto d = run_trials(c, reg, &order);
  CHECK(a.records == d.records);
  std::vector<WalkRecord> concat;
  for (long long t = 0; t < c.trials; ++t) {
    const auto p = sample_path(c, reg, t);
    concat.insert(concat.end(), p.begin(), p.end());
  }
  CHECK(concat == a.records);
  std::ostringstream x;
  std::ostringstream y;
  write_csv(x, a);
  write_csv(y, d);
  CHECK(x.str() == y.str());
}

TEST_CASE("empty checkpoints record only the final step") {
  auto c = config_for(coin(), 10, 3, {"exponent_sum"});
  c.checkpoints.clear();
  const auto r = run_trials(c, FunctionalRegistry::standard());
  CHECK(r.records.size() == 3);
  for (const auto& rec : r.records) {
    CHECK(rec.k == 10);
  }
}

TEST_CASE("increments are atoms and maintenance preserves the element") {
  const auto m = parse_measure("n=3\n1/4 1 2\n1/4 -2 -2\n1/4 D2\n1/4 -1\n");
  auto c = config_for(m, 32, 5, {"exponent_sum"});
  c.collapse_threshold = 4;
  c.verify_maintenance = true;
  c.keep_words = true;
  c.checkpoints = {1, 2, 3, 5, 8, 13, 21, 32};
  const auto reg = FunctionalRegistry::standard();
  const auto r = run_trials(c, reg);
  for (long long trial = 0; trial < c.trials; ++trial) {
    const auto inc = sample_increments(c, trial);
    REQUIRE(inc.size() == 32);
    BraidWord raw(3);
    std::size_t step = 0;
    for (const auto& rec : r.records) {
      if (rec.trial != trial) {
        continue;
      }
      while (static_cast<long long>(step) < rec.k) {
        REQUIRE(inc[step] < m.atoms.size());
        raw = BraidWord(3, [&] {
          auto l = raw.letters();
          const auto& a = m.atoms[inc[step]].word.letters();
          l.insert(l.end(), a.begin(), a.end());
          return l;
        }());
        ++step;
      }
      CHECK(garside::equals(BraidWord(3, rec.word), raw));
    }
  }
}

TEST_CASE("empirical escape on the deterministic walk") {
  auto c = config_for(parse_measure("n=2\n1 1\n"), 8, 2, {"fdtc"});
  const auto r = run_trials(c, FunctionalRegistry::standard());
  const auto rows = empirical_escape(r, "fdtc", Q(1));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].fraction() == Q(1));
  CHECK(rows[1].fraction() == Q(1));
  CHECK(rows[2].fraction() == Q(0));
  CHECK(rows[3].fraction() == Q(0));
  for (const auto& row : empirical_escape(r, "fdtc", Q(100))) {
    CHECK(row.fraction() == Q(1));
  }
  CHECK_THROWS_AS(empirical_escape(r, "floor", Q(1)), ConfigError);
}

TEST_CASE("undefined values are excluded and counted") {
  auto c = config_for(coin(), 4, 4, {"s_mid"});
  c.checkpoints = {1, 2, 3, 4};
  const auto r = run_trials(c, FunctionalRegistry::standard());
  for (const auto& row : empirical_escape(r, "s_mid", Q(1))) {
    CHECK(row.defined + row.undefined == 4);
    // Closures of even-length B_2 words are two-component links.
    if (row.k % 2 == 0) {
      CHECK(row.undefined == 4);
      CHECK(row.fraction() == 0);
    } else {
      CHECK(row.defined == 4);
    }
  }
  std::ostringstream out;
  write_csv(out, r);
  CHECK(out.str().find("undefined") != std::string::npos);
}

TEST_CASE("visit statistics") {
  auto c = config_for(parse_measure("n=2\n1 1\n"), 6, 1, {"genus_bound"});
  c.checkpoints = {1, 2, 3, 4, 5, 6};
  const auto r = run_trials(c, FunctionalRegistry::standard());
  const auto never = visit_statistics(r, [](const WalkRecord&) { return false; });
  CHECK(never.total_visits == 0);
  CHECK_FALSE(never.last_visit);
  CHECK(never.per_trial == std::vector<long long>{0});
  const std::size_t col = r.column("genus_bound");
  const auto low = visit_statistics(r, [&](const WalkRecord& rec) {
    return rec.values[col] && *rec.values[col] <= 0;
  });
  CHECK(low.total_visits == 2);
  CHECK(low.last_visit == 2);
}

TEST_CASE("config validation") {
  auto c = config_for(coin(), 8, 1, {"exponent_sum"});
  c.checkpoints = {0};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c.checkpoints = {9};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c.checkpoints = {4, 2};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c.checkpoints = {2};
  c.trials = 0;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  CHECK(default_checkpoints(10) == std::vector<long long>{1, 2, 4, 8, 10});
  CHECK(default_checkpoints(8) == std::vector<long long>{1, 2, 4, 8});
}

TEST_CASE("JSON lines output") {
  auto c = config_for(parse_measure("n=2\n1 1\n"), 2, 1, {"fdtc", "s_mid"});
  const auto r = run_trials(c, FunctionalRegistry::standard());
  std::ostringstream out;
  write_json_lines(out, r);
  CHECK(out.str() ==
        "{\"trial\":0,\"k\":1,\"len\":1,\"values\":{\"fdtc\":\"1/2\",\"s_mid\":\"0\"}}\n"
        "{\"trial\":0,\"k\":2,\"len\":2,\"values\":{\"fdtc\":\"1\",\"s_mid\":null}}\n");
}
