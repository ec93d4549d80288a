#pragma once

// Named Monte Carlo experiments over the walk engine. Each output embeds the
// full spec, so re-running the embedded spec reproduces the output byte for
// byte at any thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/fdtc.hpp"
#include "braidwalk/garside.hpp"
#include "braidwalk/measure.hpp"
#include "braidwalk/rational.hpp"

namespace braidwalk {

enum class ExperimentKind { kFdtcEscape, kGenusGrowth, kConjugacy, kTransience, kSlice, kAlternating };

std::string_view experiment_name(ExperimentKind kind);
// Throws ConfigError on an unknown name.
ExperimentKind parse_experiment_kind(std::string_view name);
std::vector<std::string_view> experiment_names();

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kFdtcEscape;
  Measure measure;
  BraidWord start{2};
  long long steps = 64;
  long long trials = 200;
  std::uint64_t seed = kDefaultSeed;
  // Empty: powers of two plus the last step; every step for transience.
  std::vector<long long> checkpoints;
  Rational c = 1;       // escape / genus / slice threshold
  long long g = 1;      // transience genus
  Rational r = 1;       // conjugacy FDTC threshold
  long long q_max = 10;
  long long k_max = 64;
  Rational defect = kDefaultDefectBound;
  std::size_t conjugacy_budget = garside::kDefaultConjugacyBudget;
};

// Checkpoints the experiment actually uses.
std::vector<long long> effective_checkpoints(const ExperimentSpec& spec);

// Throws ConfigError on out-of-range parameters.
void validate_spec(const ExperimentSpec& spec);

// "key = value" lines followed by the measure file; canonical, so
// format_spec(parse_spec(format_spec(s))) == format_spec(s).
std::string format_spec(const ExperimentSpec& spec);
// Accepts the measure file format mixed with "key = value" lines. Keys:
// experiment, rng, seed, trials, steps, checkpoints (list, "default" or
// "all"), start, C, g, r, qmax, kmax, defect, budget.
ExperimentSpec parse_spec(std::string_view text);

struct ExperimentOutput {
  std::string table;
  std::string plot;  // tidy CSV: experiment,k,series,value
  bool inconclusive = false;

  int exit_code() const noexcept { return inconclusive ? 3 : 0; }
};

ExperimentOutput run_experiment(const ExperimentSpec& spec, int threads = 1, bool json = false);

// The spec embedded in a CSV or JSON-lines output. Throws ParseError.
ExperimentSpec embedded_spec(std::string_view output);

struct ConjugacyCase {
  BraidWord a;
  BraidWord b;
  std::optional<Rational> fdtc_a;
  std::optional<Rational> fdtc_b;
};

struct ConjugacyTally {
  long long pairs = 0;
  long long fdtc_above_r = 0;      // |FDTC| > r for both words
  long long equal_invariants = 0;  // same components, signature, Alexander
  long long conjugate = 0;
  long long not_conjugate = 0;
  long long inconclusive = 0;      // budget exhausted
};

// Conjugacy is decided only for pairs whose closure invariants agree.
ConjugacyTally tally_conjugacy(const std::vector<ConjugacyCase>& cases, const Rational& r,
                               std::size_t budget);

}  // namespace braidwalk
