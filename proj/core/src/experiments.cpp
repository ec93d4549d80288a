#include "braidwalk/experiments.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <variant>

#include "json.hpp"

#include "braidwalk/error.hpp"
#include "braidwalk/link_invariants.hpp"
#include "braidwalk/quasimorphism.hpp"
#include "braidwalk/rng.hpp"
#include "braidwalk/walk.hpp"

namespace braidwalk {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 6> kNames{{
    {ExperimentKind::kFdtcEscape, "fdtc-escape"},
    {ExperimentKind::kGenusGrowth, "genus-growth"},
    {ExperimentKind::kConjugacy, "conjugacy"},
    {ExperimentKind::kTransience, "transience"},
    {ExperimentKind::kSlice, "slice"},
    {ExperimentKind::kAlternating, "alternating"},
}};

constexpr int kDecimals = 6;
constexpr std::string_view kSpecBegin = "# spec-begin";
constexpr std::string_view kSpecEnd = "# spec-end";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_integer(std::string_view key, std::string_view text) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<long long> all_steps(long long steps) {
  std::vector<long long> out;
  for (long long k = 1; k <= steps; ++k) {
    out.push_back(k);
  }
  return out;
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) {
      return name;
    }
  }
  return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) {
      return k;
    }
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

std::vector<std::string_view> experiment_names() {
  std::vector<std::string_view> out;
  for (const auto& entry : kNames) {
    out.push_back(entry.second);
  }
  return out;
}

std::vector<long long> effective_checkpoints(const ExperimentSpec& spec) {
  if (!spec.checkpoints.empty()) {
    return spec.checkpoints;
  }
  if (spec.kind == ExperimentKind::kTransience) {
    return all_steps(spec.steps);
  }
  return default_checkpoints(spec.steps);
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.steps < 1) {
    throw ConfigError("steps must be >= 1");
  }
  if (spec.trials < 1) {
    throw ConfigError("trials must be >= 1");
  }
  if (spec.kind == ExperimentKind::kConjugacy && spec.trials < 2) {
    throw ConfigError("conjugacy pairs trials (2j, 2j+1); needs trials >= 2");
  }
  if (spec.c < 0 || spec.r < 0 || spec.g < 0) {
    throw ConfigError("C, g and r must be non-negative");
  }
  if (spec.q_max < 1 || spec.k_max < 1) {
    throw ConfigError("qmax and kmax must be >= 1");
  }
  if (spec.defect < 0) {
    throw ConfigError("defect must be non-negative");
  }
  if (spec.conjugacy_budget < 1) {
    throw ConfigError("budget must be >= 1");
  }
  if (spec.start.strands() != spec.measure.strands) {
    throw ConfigError("start word and measure live in different braid groups");
  }
  (void)validate_measure(spec.measure);
  long long previous = 0;
  for (long long k : spec.checkpoints) {
    if (k <= previous || k > spec.steps) {
      throw ConfigError("checkpoints must be increasing and within 1..steps");
    }
    previous = k;
  }
}

std::string format_spec(const ExperimentSpec& spec) {
  std::ostringstream out;
  out << "experiment = " << experiment_name(spec.kind) << '\n';
  out << "rng = " << kRngName << '\n';
  out << "seed = " << spec.seed << '\n';
  out << "trials = " << spec.trials << '\n';
  out << "steps = " << spec.steps << '\n';
  const auto cps = effective_checkpoints(spec);
  out << "checkpoints = ";
  if (cps == all_steps(spec.steps)) {
    out << "all";
  } else {
    for (std::size_t j = 0; j < cps.size(); ++j) {
      out << (j == 0 ? "" : ",") << cps[j];
    }
  }
  out << '\n';
  if (!spec.start.empty()) {
    out << "start = " << to_string(spec.start) << '\n';
  }
  out << "C = " << to_string(spec.c) << '\n';
  out << "g = " << spec.g << '\n';
  out << "r = " << to_string(spec.r) << '\n';
  out << "qmax = " << spec.q_max << '\n';
  out << "kmax = " << spec.k_max << '\n';
  out << "defect = " << to_string(spec.defect) << '\n';
  out << "budget = " << spec.conjugacy_budget << '\n';
  out << format_measure(spec.measure);
  return out.str();
}

ExperimentSpec parse_spec(std::string_view text) {
  std::map<std::string, std::string, std::less<>> values;
  std::string measure_text;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    const auto eq = line.find('=');
    const auto key = eq == std::string_view::npos ? std::string_view{} : trim(line.substr(0, eq));
    const bool is_setting = !key.empty() && key != "n" &&
                            key.find_first_of(" \t/") == std::string_view::npos &&
                            !(key.front() >= '0' && key.front() <= '9') && key.front() != '-';
    if (!is_setting) {
      measure_text.append(raw);
      measure_text.push_back('\n');
      continue;
    }
    if (values.count(key) != 0) {
      throw ConfigError("duplicate key " + std::string(key));
    }
    values.emplace(std::string(key), std::string(trim(line.substr(eq + 1))));
  }

  ExperimentSpec spec;
  spec.measure = parse_measure(measure_text);
  spec.start = BraidWord(spec.measure.strands);
  for (const auto& [key, value] : values) {
    if (key == "experiment") {
      spec.kind = parse_experiment_kind(value);
    } else if (key == "rng") {
      if (value != kRngName) {
        throw ConfigError("unsupported rng '" + value + "' (this build provides " +
                          std::string(kRngName) + ")");
      }
    } else if (key == "seed") {
      spec.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "trials") {
      spec.trials = parse_integer<long long>(key, value);
    } else if (key == "steps") {
      spec.steps = parse_integer<long long>(key, value);
    } else if (key == "checkpoints") {
      // resolved below, once steps is known
    } else if (key == "start") {
      spec.start = parse_word_text(value, spec.measure.strands);
    } else if (key == "C") {
      spec.c = parse_rational(value);
    } else if (key == "g") {
      spec.g = parse_integer<long long>(key, value);
    } else if (key == "r") {
      spec.r = parse_rational(value);
    } else if (key == "qmax") {
      spec.q_max = parse_integer<long long>(key, value);
    } else if (key == "kmax") {
      spec.k_max = parse_integer<long long>(key, value);
    } else if (key == "defect") {
      spec.defect = parse_rational(value);
    } else if (key == "budget") {
      spec.conjugacy_budget = parse_integer<std::size_t>(key, value);
    } else {
      throw ConfigError("unknown key " + key);
    }
  }
  if (const auto it = values.find("checkpoints"); it != values.end()) {
    const std::string& v = it->second;
    if (v == "all") {
      spec.checkpoints = all_steps(spec.steps);
    } else if (v != "default" && !v.empty()) {
      std::string_view rest = v;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        spec.checkpoints.push_back(parse_integer<long long>("checkpoints", trim(rest.substr(0, comma))));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    }
  }
  validate_spec(spec);
  return spec;
}

ConjugacyTally tally_conjugacy(const std::vector<ConjugacyCase>& cases, const Rational& r,
                               std::size_t budget) {
  ConjugacyTally t;
  for (const auto& c : cases) {
    ++t.pairs;
    if (c.fdtc_a && c.fdtc_b && abs(*c.fdtc_a) > r && abs(*c.fdtc_b) > r) {
      ++t.fdtc_above_r;
    }
    if (closure_component_count(c.a) != closure_component_count(c.b) ||
        signature(c.a) != signature(c.b) || alexander_polynomial(c.a) != alexander_polynomial(c.b)) {
      continue;
    }
    ++t.equal_invariants;
    try {
      if (garside::are_conjugate(c.a, c.b, budget).conjugate) {
        ++t.conjugate;
      } else {
        ++t.not_conjugate;
      }
    } catch (const BudgetExceeded&) {
      ++t.inconclusive;
    }
  }
  return t;
}

namespace {

using Cell = std::variant<long long, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::vector<Table> tables;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::tuple<long long, std::string, std::string>> plot;  // k, series, value
  bool inconclusive = false;
};

void add_fraction(std::vector<Cell>& row, const Rational& v) {
  row.emplace_back(to_string(v));
  row.emplace_back(to_decimal(v, kDecimals));
}

std::vector<std::string> with_decimal(std::vector<std::string> cols, const std::string& name) {
  cols.push_back(name);
  cols.push_back(name + "_dec");
  return cols;
}

WalkConfig walk_config(const ExperimentSpec& spec, std::vector<std::string> functionals,
                       int threads) {
  WalkConfig c;
  c.measure = spec.measure;
  c.start = spec.start;
  c.steps = spec.steps;
  c.trials = spec.trials;
  c.seed = spec.seed;
  c.checkpoints = effective_checkpoints(spec);
  c.functionals = std::move(functionals);
  c.threads = threads;
  return c;
}

FunctionalRegistry registry_for(const ExperimentSpec& spec) {
  return FunctionalRegistry::standard({spec.q_max, spec.k_max, spec.defect});
}

Report fdtc_escape(const ExperimentSpec& spec, int threads) {
  const auto result = run_trials(walk_config(spec, {"fdtc"}, threads), registry_for(spec));
  Report rep;
  Table t{"escape",
          with_decimal(with_decimal({"k", "defined", "undefined"}, "frac_abs_le_C"),
                       "frac_abs_gt_1"),
          {}};
  for (long long k : checkpoint_steps(result)) {
    const auto le = tally_escape(result, 0, k, [&](const Rational& v) { return abs(v) <= spec.c; });
    const auto gt1 = tally_escape(result, 0, k, [](const Rational& v) { return abs(v) > 1; });
    std::vector<Cell> row{k, le.defined, le.undefined};
    add_fraction(row, le.fraction());
    add_fraction(row, gt1.fraction());
    t.rows.push_back(std::move(row));
    rep.plot.emplace_back(k, "frac_abs_le_C", to_decimal(le.fraction(), kDecimals));
    rep.plot.emplace_back(k, "frac_abs_gt_1", to_decimal(gt1.fraction(), kDecimals));
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report genus_growth(const ExperimentSpec& spec, int threads) {
  const auto result =
      run_trials(walk_config(spec, {"fdtc_genus_bound"}, threads), registry_for(spec));
  Report rep;
  Table t{"genus",
          with_decimal(with_decimal({"k", "defined", "undefined"}, "mean_bound"), "frac_gt_C"),
          {}};
  for (long long k : checkpoint_steps(result)) {
    Rational sum = 0;
    long long defined = 0;
    long long undefined = 0;
    for (const auto& rec : result.records) {
      if (rec.k != k) {
        continue;
      }
      if (rec.values[0]) {
        sum += *rec.values[0];
        ++defined;
      } else {
        ++undefined;
      }
    }
    const Rational mean = defined == 0 ? Rational(0) : Rational(sum / ratio(defined));
    const auto gt = tally_escape(result, 0, k, [&](const Rational& v) { return v > spec.c; });
    std::vector<Cell> row{k, defined, undefined};
    add_fraction(row, mean);
    add_fraction(row, gt.fraction());
    t.rows.push_back(std::move(row));
    rep.plot.emplace_back(k, "mean_bound", to_decimal(mean, kDecimals));
    rep.plot.emplace_back(k, "frac_gt_C", to_decimal(gt.fraction(), kDecimals));
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report conjugacy(const ExperimentSpec& spec, int threads) {
  auto config = walk_config(spec, {"fdtc"}, threads);
  config.keep_words = true;
  const auto result = run_trials(config, registry_for(spec));
  const int n = spec.measure.strands;
  // records[(trial, k)] for pairing trial 2j with 2j + 1
  std::map<std::pair<long long, long long>, const WalkRecord*> at;
  for (const auto& rec : result.records) {
    at[{rec.trial, rec.k}] = &rec;
  }
  Report rep;
  Table t{"conjugacy",
          with_decimal(with_decimal({"k", "pairs", "fdtc_above_r"}, "frac_fdtc_above_r"),
                       "frac_conjugate"),
          {}};
  t.columns.insert(t.columns.begin() + 5,
                   {"equal_invariants", "conjugate", "not_conjugate", "inconclusive"});
  for (long long k : checkpoint_steps(result)) {
    std::vector<ConjugacyCase> cases;
    for (long long j = 0; 2 * j + 1 < spec.trials; ++j) {
      const auto* a = at.at({2 * j, k});
      const auto* b = at.at({2 * j + 1, k});
      cases.push_back({BraidWord(n, a->word), BraidWord(n, b->word), a->values[0], b->values[0]});
    }
    const auto tally = tally_conjugacy(cases, spec.r, spec.conjugacy_budget);
    rep.inconclusive = rep.inconclusive || tally.inconclusive > 0;
    const Rational above = tally.pairs == 0 ? Rational(0) : ratio(tally.fdtc_above_r, tally.pairs);
    const long long decided = tally.conjugate + tally.not_conjugate;
    const Rational conj = decided == 0 ? Rational(0) : ratio(tally.conjugate, decided);
    std::vector<Cell> row{k, tally.pairs, tally.fdtc_above_r};
    add_fraction(row, above);
    row.insert(row.end(), {Cell(tally.equal_invariants), Cell(tally.conjugate),
                           Cell(tally.not_conjugate), Cell(tally.inconclusive)});
    add_fraction(row, conj);
    t.rows.push_back(std::move(row));
    rep.plot.emplace_back(k, "frac_fdtc_above_r", to_decimal(above, kDecimals));
    rep.plot.emplace_back(k, "frac_conjugate", to_decimal(conj, kDecimals));
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

Report transience(const ExperimentSpec& spec, int threads) {
  const auto result = run_trials(
      walk_config(spec, {"genus_bound", "sigma1_count", "block_count"}, threads), registry_for(spec));
  auto member = [&](const WalkRecord& rec) {
    return rec.values[0] && *rec.values[0] <= ratio(spec.g);
  };
  const auto stats = visit_statistics(result, member);
  Report rep;
  Table visits{"visits", {"trial", "visits", "last_visit"}, {}};
  for (long long trial = 0; trial < spec.trials; ++trial) {
    const auto t = static_cast<std::size_t>(trial);
    const auto& last = stats.per_trial_last[t];
    visits.rows.push_back(
        {trial, stats.per_trial[t], last ? Cell(*last) : Cell(std::string("none"))});
  }
  Table audit{"audit", {"trial", "k", "sigma1_count", "block_count", "within_2m_plus_1"}, {}};
  long long violations = 0;
  std::map<long long, long long> visits_at;
  for (const auto& rec : result.records) {
    if (!member(rec)) {
      continue;
    }
    ++visits_at[rec.k];
    const long long m = static_cast<long long>(rec.values[1]->get_num().get_si());
    const long long blocks = static_cast<long long>(rec.values[2]->get_num().get_si());
    const bool ok = blocks <= 2 * m + 1;
    violations += ok ? 0 : 1;
    audit.rows.push_back({rec.trial, rec.k, m, blocks, std::string(ok ? "yes" : "no")});
  }
  for (const auto& [k, count] : visits_at) {
    rep.plot.emplace_back(k, "visits", std::to_string(count));
  }
  rep.summary = {{"total_visits", std::to_string(stats.total_visits)},
                 {"last_visit", stats.last_visit ? std::to_string(*stats.last_visit) : "none"},
                 {"audit_violations", std::to_string(violations)}};
  rep.tables.push_back(std::move(visits));
  rep.tables.push_back(std::move(audit));
  return rep;
}

Report threshold_fraction(const ExperimentSpec& spec, int threads, const std::string& functional,
                          const std::string& column,
                          const std::function<bool(const Rational&)>& predicate) {
  const auto result = run_trials(walk_config(spec, {functional}, threads), registry_for(spec));
  Report rep;
  Table t{functional, with_decimal({"k", "defined", "undefined"}, column), {}};
  for (long long k : checkpoint_steps(result)) {
    const auto row_tally = tally_escape(result, 0, k, predicate);
    std::vector<Cell> row{k, row_tally.defined, row_tally.undefined};
    add_fraction(row, row_tally.fraction());
    t.rows.push_back(std::move(row));
    rep.plot.emplace_back(k, column, to_decimal(row_tally.fraction(), kDecimals));
  }
  rep.tables.push_back(std::move(t));
  return rep;
}

std::string render_cell(const Cell& c) {
  if (const auto* v = std::get_if<long long>(&c)) {
    return std::to_string(*v);
  }
  return std::get<std::string>(c);
}

std::string render(const ExperimentSpec& spec, const Report& rep, bool json) {
  std::ostringstream out;
  const std::string spec_text = format_spec(spec);
  if (json) {
    nlohmann::ordered_json head;
    head["spec"] = spec_text;
    out << head.dump() << '\n';
    for (const auto& table : rep.tables) {
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        obj["table"] = table.name;
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (const auto* v = std::get_if<long long>(&row[j])) {
            obj[table.columns[j]] = *v;
          } else {
            obj[table.columns[j]] = std::get<std::string>(row[j]);
          }
        }
        out << obj.dump() << '\n';
      }
    }
    if (!rep.summary.empty()) {
      nlohmann::ordered_json summary;
      for (const auto& [key, value] : rep.summary) {
        summary[key] = value;
      }
      nlohmann::ordered_json obj;
      obj["summary"] = std::move(summary);
      out << obj.dump() << '\n';
    }
    return out.str();
  }
  out << kSpecBegin << '\n';
  std::istringstream lines(spec_text);
  for (std::string line; std::getline(lines, line);) {
    out << "# " << line << '\n';
  }
  out << kSpecEnd << '\n';
  for (const auto& [key, value] : rep.summary) {
    out << "# " << key << " = " << value << '\n';
  }
  bool first = true;
  for (const auto& table : rep.tables) {
    if (!first) {
      out << '\n';
    }
    first = false;
    if (rep.tables.size() > 1) {
      out << "# table = " << table.name << '\n';
    }
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      out << (j == 0 ? "" : ",") << table.columns[j];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j == 0 ? "" : ",") << render_cell(row[j]);
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentSpec& spec, int threads, bool json) {
  validate_spec(spec);
  Report rep;
  switch (spec.kind) {
    case ExperimentKind::kFdtcEscape:
      rep = fdtc_escape(spec, threads);
      break;
    case ExperimentKind::kGenusGrowth:
      rep = genus_growth(spec, threads);
      break;
    case ExperimentKind::kConjugacy:
      rep = conjugacy(spec, threads);
      break;
    case ExperimentKind::kTransience:
      rep = transience(spec, threads);
      break;
    case ExperimentKind::kSlice:
      rep = threshold_fraction(spec, threads, "g4_lower", "frac_g4_gt_C",
                               [&](const Rational& v) { return v > spec.c; });
      break;
    case ExperimentKind::kAlternating:
      rep = threshold_fraction(spec, threads, "nonalt", "frac_nonalternating",
                               [](const Rational& v) { return v == 1; });
      break;
  }
  ExperimentOutput out;
  out.table = render(spec, rep, json);
  std::ostringstream plot;
  plot << "experiment,k,series,value\n";
  for (const auto& [k, series, value] : rep.plot) {
    plot << experiment_name(spec.kind) << ',' << k << ',' << series << ',' << value << '\n';
  }
  out.plot = plot.str();
  out.inconclusive = rep.inconclusive;
  return out;
}

ExperimentSpec embedded_spec(std::string_view output) {
  const auto first_newline = output.find('\n');
  const auto first_line = output.substr(0, first_newline);
  if (!first_line.empty() && first_line.front() == '{') {
    const auto head = nlohmann::json::parse(first_line, nullptr, false);
    if (head.is_discarded() || !head.contains("spec") || !head["spec"].is_string()) {
      throw ParseError("JSON output does not start with a spec object");
    }
    return parse_spec(head["spec"].get<std::string>());
  }
  const auto begin = output.find(kSpecBegin);
  const auto end = output.find(kSpecEnd);
  if (begin == std::string_view::npos || end == std::string_view::npos || end < begin) {
    throw ParseError("output carries no embedded spec");
  }
  std::string text;
  std::istringstream lines(std::string(output.substr(begin + kSpecBegin.size(), end - begin - kSpecBegin.size())));
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("# ", 0) == 0) {
      text += line.substr(2);
      text += '\n';
    }
  }
  return parse_spec(text);
}

}  // namespace braidwalk
