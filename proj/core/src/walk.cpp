#include "braidwalk/walk.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "braidwalk/error.hpp"
#include "braidwalk/garside.hpp"

namespace braidwalk {

std::vector<long long> default_checkpoints(long long steps) {
  std::vector<long long> out;
  for (long long k = 1; k <= steps; k *= 2) {
    out.push_back(k);
    if (k > steps / 2) {
      break;
    }
  }
  if (steps >= 1 && (out.empty() || out.back() != steps)) {
    out.push_back(steps);
  }
  return out;
}

void validate_config(const WalkConfig& config) {
  if (config.steps < 1) {
    throw ConfigError("steps must be >= 1");
  }
  if (config.trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  if (config.threads < 1) {
    throw ConfigError("threads must be >= 1");
  }
  if (config.start.strands() != config.measure.strands) {
    throw ConfigError("start word and measure live in different braid groups");
  }
  long long previous = 0;
  for (long long k : config.checkpoints) {
    if (k <= previous || k > config.steps) {
      throw ConfigError("checkpoints must be increasing and within 1..steps");
    }
    previous = k;
  }
  (void)validate_measure(config.measure);
}

std::size_t WalkResult::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw ConfigError("no column " + std::string(name) + " in walk records");
  }
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<std::size_t> sample_increments(const WalkConfig& config, long long trial) {
  const AtomSampler sampler(config.measure);
  SplitMix64 rng(substream_seed(config.seed, static_cast<std::uint64_t>(trial)));
  std::vector<std::size_t> out(static_cast<std::size_t>(config.steps));
  for (auto& x : out) {
    x = sampler.draw(rng);
  }
  return out;
}

namespace {

// Appends with cancellation at the junction; keeps `word` freely reduced.
void append_reduced(std::vector<Letter>& word, const std::vector<Letter>& tail) {
  for (Letter x : tail) {
    if (!word.empty() && word.back() == -x) {
      word.pop_back();
    } else {
      word.push_back(x);
    }
  }
}

}  // namespace

std::vector<WalkRecord> sample_path(const WalkConfig& config, const FunctionalRegistry& registry,
                                    long long trial) {
  const int n = config.measure.strands;
  std::vector<const Functional*> functionals;
  for (const auto& name : config.functionals) {
    functionals.push_back(&registry.get(name));
  }
  std::vector<long long> checkpoints = config.checkpoints;
  if (checkpoints.empty()) {
    checkpoints.push_back(config.steps);
  }

  const auto increments = sample_increments(config, trial);
  std::vector<Letter> word;
  append_reduced(word, config.start.letters());
  std::vector<Letter> raw = config.start.letters();
  std::size_t last_collapse = 0;
  std::size_t next_checkpoint = 0;
  std::vector<WalkRecord> records;
  for (long long k = 1; k <= config.steps && next_checkpoint < checkpoints.size(); ++k) {
    const auto& atom = config.measure.atoms[increments[static_cast<std::size_t>(k - 1)]].word;
    append_reduced(word, atom.letters());
    if (config.verify_maintenance && k <= 32) {
      raw.insert(raw.end(), atom.letters().begin(), atom.letters().end());
    }
    if (word.size() > std::max(config.collapse_threshold, 2 * last_collapse)) {
      word = garside::to_word(garside::left_normal_form(BraidWord(n, std::move(word)))).letters();
      last_collapse = word.size();
    }
    if (k != checkpoints[next_checkpoint]) {
      continue;
    }
    ++next_checkpoint;
    const BraidWord current(n, word);
    if (config.verify_maintenance && k <= 32 &&
        !garside::equals(current, BraidWord(n, raw))) {
      throw Error("word maintenance changed the walk position at step " + std::to_string(k));
    }
    WalkRecord rec;
    rec.trial = trial;
    rec.k = k;
    rec.length = word.size();
    if (config.keep_words) {
      rec.word = word;
    }
    for (const auto* f : functionals) {
      try {
        rec.values.push_back(f->evaluate(current));
      } catch (const Error&) {
        rec.values.emplace_back(std::nullopt);
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

WalkResult run_trials(const WalkConfig& config, const FunctionalRegistry& registry,
                      const std::vector<long long>* order) {
  validate_config(config);
  for (const auto& name : config.functionals) {
    (void)registry.get(name);
  }
  std::vector<long long> schedule;
  if (order != nullptr) {
    schedule = *order;
    auto sorted = schedule;
    std::sort(sorted.begin(), sorted.end());
    for (long long t = 0; t < config.trials; ++t) {
      if (static_cast<std::size_t>(t) >= sorted.size() || sorted[static_cast<std::size_t>(t)] != t) {
        throw ConfigError("trial order must be a permutation of 0..trials-1");
      }
    }
  } else {
    for (long long t = 0; t < config.trials; ++t) {
      schedule.push_back(t);
    }
  }
  std::vector<std::vector<WalkRecord>> per_trial(static_cast<std::size_t>(config.trials));
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t j = cursor.fetch_add(1);
      if (j >= schedule.size()) {
        return;
      }
      const long long trial = schedule[j];
      try {
        per_trial[static_cast<std::size_t>(trial)] = sample_path(config, registry, trial);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  const auto workers = static_cast<std::size_t>(
      std::min<long long>(config.threads, config.trials));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < workers; ++j) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  WalkResult result;
  result.columns = config.functionals;
  result.trials = config.trials;
  for (auto& recs : per_trial) {
    for (auto& r : recs) {
      result.records.push_back(std::move(r));
    }
  }
  return result;
}

Rational EscapeRow::fraction() const {
  if (defined == 0) {
    return Rational(0);
  }
  return ratio(within, defined);
}

EscapeRow tally_escape(const WalkResult& result, std::size_t column, long long k,
                       const std::function<bool(const Rational&)>& predicate) {
  EscapeRow row;
  row.k = k;
  for (const auto& rec : result.records) {
    if (rec.k != k) {
      continue;
    }
    const auto& v = rec.values[column];
    if (!v) {
      ++row.undefined;
      continue;
    }
    ++row.defined;
    if (predicate(*v)) {
      ++row.within;
    }
  }
  return row;
}

std::vector<long long> checkpoint_steps(const WalkResult& result) {
  std::vector<long long> ks;
  for (const auto& rec : result.records) {
    ks.push_back(rec.k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<EscapeRow> empirical_escape(const WalkResult& result, std::string_view functional,
                                        const Rational& c) {
  const std::size_t col = result.column(functional);
  std::vector<EscapeRow> out;
  for (long long k : checkpoint_steps(result)) {
    out.push_back(tally_escape(result, col, k, [&](const Rational& v) { return abs(v) <= c; }));
  }
  return out;
}

VisitStatistics visit_statistics(const WalkResult& result,
                                 const std::function<bool(const WalkRecord&)>& predicate) {
  VisitStatistics stats;
  stats.per_trial.assign(static_cast<std::size_t>(result.trials), 0);
  stats.per_trial_last.assign(static_cast<std::size_t>(result.trials), std::nullopt);
  for (const auto& rec : result.records) {
    if (!predicate(rec)) {
      continue;
    }
    const auto t = static_cast<std::size_t>(rec.trial);
    ++stats.total_visits;
    ++stats.per_trial[t];
    stats.per_trial_last[t] = std::max(stats.per_trial_last[t].value_or(rec.k), rec.k);
    stats.last_visit = std::max(stats.last_visit.value_or(rec.k), rec.k);
  }
  return stats;
}

namespace {

std::string render(const std::optional<Rational>& v) {
  return v ? to_string(*v) : std::string("undefined");
}

}  // namespace

void write_csv(std::ostream& out, const WalkResult& result) {
  out << "trial,k,len";
  for (const auto& c : result.columns) {
    out << ',' << c;
  }
  out << '\n';
  for (const auto& rec : result.records) {
    out << rec.trial << ',' << rec.k << ',' << rec.length;
    for (const auto& v : rec.values) {
      out << ',' << render(v);
    }
    out << '\n';
  }
}

void write_json_lines(std::ostream& out, const WalkResult& result) {
  for (const auto& rec : result.records) {
    nlohmann::ordered_json row;
    row["trial"] = rec.trial;
    row["k"] = rec.k;
    row["len"] = rec.length;
    auto values = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < result.columns.size(); ++j) {
      const auto& v = rec.values[j];
      values[result.columns[j]] = v ? nlohmann::ordered_json(to_string(*v)) : nlohmann::ordered_json();
    }
    row["values"] = std::move(values);
    out << row.dump() << '\n';
  }
}

}  // namespace braidwalk
