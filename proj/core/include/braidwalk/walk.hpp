#pragma once

// Seeded random walks g_k = h x_1 ... x_k on B_n with checkpointed functional
// evaluation. Every trial draws from its own substream, so the records depend
// only on (config, trial) and never on scheduling.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/measure.hpp"
#include "braidwalk/quasimorphism.hpp"
#include "braidwalk/rational.hpp"

namespace braidwalk {

inline constexpr std::size_t kDefaultCollapseThreshold = 512;

struct WalkConfig {
  Measure measure;
  BraidWord start{2};
  long long steps = 64;
  long long trials = 1;
  std::uint64_t seed = 0;
  // Sorted, distinct, within 1..steps. Empty: the final step only.
  std::vector<long long> checkpoints;
  std::vector<std::string> functionals;
  // Normal-form collapse once the word is longer than
  // max(threshold, 2 * length after the previous collapse).
  std::size_t collapse_threshold = kDefaultCollapseThreshold;
  // Checks the maintained word against the raw product at checkpoints k <= 32.
  bool verify_maintenance = false;
  // Stores the maintained word in each record (not written to CSV/JSON).
  bool keep_words = false;
  int threads = 1;
};

// 1, 2, 4, ... <= steps, plus steps itself.
std::vector<long long> default_checkpoints(long long steps);

// Throws ConfigError on bad steps, trials, checkpoints or strand counts.
void validate_config(const WalkConfig& config);

struct WalkRecord {
  long long trial = 0;
  long long k = 0;
  std::size_t length = 0;
  // Aligned with WalkConfig::functionals; nullopt renders as "undefined".
  std::vector<std::optional<Rational>> values;
  std::vector<Letter> word;  // only with WalkConfig::keep_words

  friend bool operator==(const WalkRecord&, const WalkRecord&) = default;
};

struct WalkResult {
  std::vector<std::string> columns;
  long long trials = 0;
  // Sorted by (trial, k).
  std::vector<WalkRecord> records;

  // Throws ConfigError when the column is absent.
  std::size_t column(std::string_view name) const;
};

// Atom indices x_1..x_steps of one trial.
std::vector<std::size_t> sample_increments(const WalkConfig& config, long long trial);

// Records of one trial at its checkpoints. Evaluation errors become
// undefined values. Throws Error only if maintenance verification fails.
std::vector<WalkRecord> sample_path(const WalkConfig& config, const FunctionalRegistry& registry,
                                    long long trial);

// All trials, across config.threads workers. If `order` is given, trials are
// dispatched in that order (tests use it to check order independence).
WalkResult run_trials(const WalkConfig& config, const FunctionalRegistry& registry,
                      const std::vector<long long>* order = nullptr);

struct EscapeRow {
  long long k = 0;
  long long within = 0;     // trials with |value| <= C
  long long defined = 0;    // trials with a defined value
  long long undefined = 0;

  Rational fraction() const;  // within / defined, 0 when nothing is defined
};

EscapeRow tally_escape(const WalkResult& result, std::size_t column, long long k,
                       const std::function<bool(const Rational&)>& predicate);

// Per checkpoint: fraction of trials with |value| <= C.
std::vector<EscapeRow> empirical_escape(const WalkResult& result, std::string_view functional,
                                        const Rational& c);

struct VisitStatistics {
  long long total_visits = 0;
  std::optional<long long> last_visit;
  std::vector<long long> per_trial;
  std::vector<std::optional<long long>> per_trial_last;
};

VisitStatistics visit_statistics(const WalkResult& result,
                                 const std::function<bool(const WalkRecord&)>& predicate);

// Checkpoints present in the records, ascending.
std::vector<long long> checkpoint_steps(const WalkResult& result);

// "trial,k,len,<columns>" then one row per record.
void write_csv(std::ostream& out, const WalkResult& result);
// One JSON object per record: {"trial":..,"k":..,"len":..,"values":{..}},
// values as "p/q" strings or null.
void write_json_lines(std::ostream& out, const WalkResult& result);

}  // namespace braidwalk
