// braidwalk: command-line front end for the braidwalk library.
//
// Exit codes: 0 success, 1 other failure, 2 configuration or input error,
// 3 inconclusive (a search budget ran out; partial output is still written).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidwalk/braid.hpp"
#include "braidwalk/dehornoy.hpp"
#include "braidwalk/error.hpp"
#include "braidwalk/experiments.hpp"
#include "braidwalk/fdtc.hpp"
#include "braidwalk/garside.hpp"
#include "braidwalk/link_invariants.hpp"
#include "braidwalk/quasimorphism.hpp"
#include "braidwalk/walk.hpp"

namespace bw = braidwalk;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInconclusive = 3;

// Default measure when --measure is absent: uniform on s1^{+-1}, s2^{+-1},
// Delta^{+-2} in B_3.
constexpr const char* kDefaultMeasure =
    "n=3\n1/6 1\n1/6 -1\n1/6 2\n1/6 -2\n1/6 D2\n1/6 D2^-1\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw bw::ConfigError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw bw::ConfigError("cannot write " + path);
  }
  out << text;
}

std::vector<long long> parse_checkpoints(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw bw::ParseError("bad checkpoint '" + item + "'");
    }
  }
  return out;
}

std::string nf_text(const bw::garside::NormalForm& nf) {
  std::ostringstream out;
  out << "Delta^" << nf.delta_power;
  for (const auto& f : nf.factors) {
    out << " | " << bw::to_string(f.word());
  }
  return out.str();
}

std::string sign_name(bw::dehornoy::OrderSign s) {
  switch (s) {
    case bw::dehornoy::OrderSign::kPositive:
      return "positive";
    case bw::dehornoy::OrderSign::kNegative:
      return "negative";
    case bw::dehornoy::OrderSign::kZero:
      break;
  }
  return "trivial";
}

struct Options {
  int n = 3;
  std::vector<std::string> words;
  std::string measure_path;
  std::optional<std::uint64_t> seed;
  std::optional<long long> trials;
  std::optional<long long> steps;
  std::string checkpoints;
  std::optional<std::string> c;
  std::optional<long long> g;
  std::optional<std::string> r;
  std::optional<long long> q_max;
  std::optional<long long> k_max;
  std::optional<std::string> defect;
  std::size_t budget = bw::garside::kDefaultConjugacyBudget;
  bool json = false;
  int threads = 1;
  std::string replay;
  std::string plot;
  std::string functional = "floor";
  std::vector<std::string> functionals;
  int max_len = 4;
  std::size_t random_pairs = 0;
  std::size_t beam = 64;
  bool word_length_bracket = false;
  std::string experiment;
};

bw::FunctionalOptions functional_options(const Options& o) {
  bw::FunctionalOptions f;
  if (o.q_max) {
    f.q_max = *o.q_max;
  }
  if (o.k_max) {
    f.k_max = *o.k_max;
  }
  if (o.defect) {
    f.defect = bw::parse_rational(*o.defect);
  }
  return f;
}

bw::BraidWord word_at(const Options& o, std::size_t j) {
  if (j >= o.words.size()) {
    throw bw::ConfigError("missing braid word argument");
  }
  return bw::parse_word_text(o.words[j], o.n);
}

bw::Measure load_measure(const Options& o) {
  return bw::parse_spec(o.measure_path.empty() ? std::string(kDefaultMeasure)
                                               : read_file(o.measure_path))
      .measure;
}

int cmd_nf(const Options& o) {
  const auto nf = bw::garside::left_normal_form(word_at(o, 0));
  if (o.json) {
    nlohmann::ordered_json j;
    j["inf"] = nf.inf();
    j["sup"] = nf.sup();
    j["delta_power"] = nf.delta_power;
    auto factors = nlohmann::ordered_json::array();
    for (const auto& f : nf.factors) {
      factors.push_back(bw::to_string(f.word()));
    }
    j["factors"] = factors;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << nf_text(nf) << '\n';
  }
  return 0;
}

int cmd_eq(const Options& o) {
  std::cout << (bw::garside::equals(word_at(o, 0), word_at(o, 1)) ? "true" : "false") << '\n';
  return 0;
}

int cmd_conj(const Options& o) {
  try {
    const auto cert = bw::garside::are_conjugate(word_at(o, 0), word_at(o, 1), o.budget);
    if (cert.conjugate) {
      std::cout << "conjugate\nwitness " << bw::to_string(*cert.witness) << '\n';
    } else {
      std::cout << "not conjugate\n";
    }
    return 0;
  } catch (const bw::BudgetExceeded& e) {
    std::cout << "inconclusive\n";
    std::cerr << e.what() << '\n';
    return kExitInconclusive;
  }
}

int cmd_sign(const Options& o) {
  std::cout << sign_name(bw::dehornoy::order_sign(word_at(o, 0))) << '\n';
  return 0;
}

int cmd_cmp(const Options& o) {
  switch (bw::dehornoy::compare(word_at(o, 0), word_at(o, 1))) {
    case bw::dehornoy::Comparison::kLess:
      std::cout << "<\n";
      break;
    case bw::dehornoy::Comparison::kEqual:
      std::cout << "=\n";
      break;
    case bw::dehornoy::Comparison::kGreater:
      std::cout << ">\n";
      break;
  }
  return 0;
}

int cmd_floor(const Options& o) {
  const auto bracket = o.word_length_bracket ? bw::dehornoy::FloorBracket::kWordLength
                                             : bw::dehornoy::FloorBracket::kNormalForm;
  std::cout << bw::dehornoy::dehornoy_floor(word_at(o, 0), bracket).floor << '\n';
  return 0;
}

int cmd_fdtc(const Options& o) {
  const auto opts = functional_options(o);
  const auto w = word_at(o, 0);
  const auto est = bw::fdtc_exact(w, opts.q_max, opts.k_max, opts.defect);
  const std::string exact = est.exact ? bw::to_string(*est.exact) : "none";
  if (o.json) {
    nlohmann::ordered_json j;
    j["lo"] = bw::to_string(est.interval.lo);
    j["hi"] = bw::to_string(est.interval.hi);
    j["exact"] = est.exact ? nlohmann::ordered_json(exact) : nlohmann::ordered_json();
    j["k"] = est.power_used;
    j["defect"] = bw::to_string(est.defect_bound);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "lo,hi,exact,k,defect\n"
              << bw::to_string(est.interval.lo) << ',' << bw::to_string(est.interval.hi) << ','
              << exact << ',' << est.power_used << ',' << bw::to_string(est.defect_bound) << '\n';
  }
  return 0;
}

int cmd_inv(const Options& o) {
  const auto opts = functional_options(o);
  const auto w = word_at(o, 0);
  const auto est = bw::fdtc_exact(w, opts.q_max, opts.k_max, opts.defect);
  const auto rep = bw::invariant_report(w, bw::genus_lower_bound_from_fdtc(w, est));
  const std::string s_lo = rep.s ? std::to_string(rep.s->lo) : "undefined";
  const std::string s_hi = rep.s ? std::to_string(rep.s->hi) : "undefined";
  const bool nonalt = bw::nonalternating_certificate(rep);
  if (o.json) {
    nlohmann::ordered_json j;
    j["e"] = rep.e;
    j["components"] = rep.components;
    j["signature"] = rep.signature;
    j["alexander"] = rep.alexander.serialize();
    j["s_lo"] = rep.s ? nlohmann::ordered_json(rep.s->lo) : nlohmann::ordered_json();
    j["s_hi"] = rep.s ? nlohmann::ordered_json(rep.s->hi) : nlohmann::ordered_json();
    j["diagram_genus_bound"] = rep.diagram_genus_bound;
    j["split"] = rep.split;
    j["g4_lower"] = bw::to_string(rep.g4_lower);
    j["fdtc_genus_bound"] = bw::to_string(*rep.fdtc_genus_bound);
    j["nonalternating"] = nonalt;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "e,components,signature,alexander,s_lo,s_hi,diagram_genus_bound,split,g4_lower,"
                 "fdtc_genus_bound,nonalternating\n"
              << rep.e << ',' << rep.components << ',' << rep.signature << ",\""
              << rep.alexander.serialize() << "\"," << s_lo << ',' << s_hi << ','
              << rep.diagram_genus_bound << ',' << (rep.split ? "true" : "false") << ','
              << bw::to_string(rep.g4_lower) << ',' << bw::to_string(*rep.fdtc_genus_bound) << ','
              << (nonalt ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_defect(const Options& o) {
  const auto registry = bw::FunctionalRegistry::standard(functional_options(o));
  const auto& f = registry.get(o.functional);
  bw::DefectReport rep;
  if (o.random_pairs > 0) {
    const auto pairs =
        bw::random_pairs(o.n, o.random_pairs, o.max_len, o.seed.value_or(bw::kDefaultSeed));
    rep = bw::defect_scan(f, pairs,
                          std::to_string(o.random_pairs) + " random pairs in B_" +
                              std::to_string(o.n) + ", length <= " + std::to_string(o.max_len),
                          o.threads);
  } else {
    rep = bw::exhaustive_defect_scan(f, o.n, o.max_len, o.threads);
  }
  const std::string g = rep.argmax ? bw::to_string(rep.argmax->first) : "";
  const std::string h = rep.argmax ? bw::to_string(rep.argmax->second) : "";
  if (o.json) {
    nlohmann::ordered_json j;
    j["functional"] = f.name;
    j["sample"] = rep.sample;
    j["max_observed"] = bw::to_string(rep.max_observed);
    j["argmax_g"] = g;
    j["argmax_h"] = h;
    j["pairs_scanned"] = rep.pairs_scanned;
    j["skipped"] = rep.skipped;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "functional,max_observed,argmax_g,argmax_h,pairs_scanned,skipped\n"
              << f.name << ',' << bw::to_string(rep.max_observed) << ",\"" << g << "\",\"" << h
              << "\"," << rep.pairs_scanned << ',' << rep.skipped << '\n';
  }
  return 0;
}

int cmd_probe(const Options& o) {
  const auto registry = bw::FunctionalRegistry::standard(functional_options(o));
  const auto result =
      bw::unboundedness_probe(load_measure(o), registry.get(o.functional), o.max_len, o.beam);
  std::cout << "# unboundedness_evidence = " << (result.increasing_tail ? "yes" : "no") << '\n';
  std::cout << "length,max_abs_value\n";
  for (const auto& row : result.rows) {
    std::cout << row.length << ',' << bw::to_string(row.max_abs) << '\n';
  }
  return 0;
}

int cmd_walk(const Options& o) {
  bw::WalkConfig config;
  config.measure = load_measure(o);
  config.start = bw::BraidWord(config.measure.strands);
  config.steps = o.steps.value_or(64);
  config.trials = o.trials.value_or(1);
  config.seed = o.seed.value_or(bw::kDefaultSeed);
  config.checkpoints = o.checkpoints.empty() ? bw::default_checkpoints(config.steps)
                                             : parse_checkpoints(o.checkpoints);
  config.functionals =
      o.functionals.empty() ? std::vector<std::string>{"exponent_sum", "floor", "fdtc"} : o.functionals;
  config.threads = o.threads;
  const auto result = bw::run_trials(config, bw::FunctionalRegistry::standard(functional_options(o)));
  if (o.json) {
    bw::write_json_lines(std::cout, result);
  } else {
    bw::write_csv(std::cout, result);
  }
  return 0;
}

int cmd_exp(const Options& o) {
  bw::ExperimentSpec spec;
  if (!o.replay.empty()) {
    spec = bw::embedded_spec(read_file(o.replay));
  } else {
    spec = bw::parse_spec(o.measure_path.empty() ? std::string(kDefaultMeasure)
                                                 : read_file(o.measure_path));
    spec.kind = bw::parse_experiment_kind(o.experiment);
    if (o.seed) {
      spec.seed = *o.seed;
    }
    if (o.trials) {
      spec.trials = *o.trials;
    }
    if (o.steps) {
      spec.steps = *o.steps;
      spec.checkpoints.clear();
    }
    if (!o.checkpoints.empty()) {
      spec.checkpoints = parse_checkpoints(o.checkpoints);
    }
    if (o.c) {
      spec.c = bw::parse_rational(*o.c);
    }
    if (o.g) {
      spec.g = *o.g;
    }
    if (o.r) {
      spec.r = bw::parse_rational(*o.r);
    }
    if (o.q_max) {
      spec.q_max = *o.q_max;
    }
    if (o.k_max) {
      spec.k_max = *o.k_max;
    }
    if (o.defect) {
      spec.defect = bw::parse_rational(*o.defect);
    }
    spec.conjugacy_budget = o.budget;
  }
  const auto out = bw::run_experiment(spec, o.threads, o.json);
  std::cout << out.table;
  if (!o.plot.empty()) {
    write_file(o.plot, out.plot);
  }
  return out.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidwalk: braid groups, Dehornoy floors, FDTC and random-walk experiments"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "strand count")->default_val(3); };
  auto add_words = [&](CLI::App* sub, int count) {
    sub->add_option("words", o.words, "braid words, e.g. \"1 -2 1\" or \"D2^2\"")
        ->expected(count)
        ->required();
  };
  auto add_fdtc_opts = [&](CLI::App* sub) {
    sub->add_option("--qmax", o.q_max, "largest denominator for exact recovery (default 10)");
    sub->add_option("--kmax", o.k_max, "largest power (default 64)");
    sub->add_option("--defect", o.defect, "floor defect bound D as p/q (default 2)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };

  auto* nf = app.add_subcommand("nf", "Garside left normal form");
  add_n(nf);
  add_words(nf, 1);
  add_json(nf);
  auto* eq = app.add_subcommand("eq", "decide equality of two braids");
  add_n(eq);
  add_words(eq, 2);
  auto* conj = app.add_subcommand("conj", "decide conjugacy (super summit sets)");
  add_n(conj);
  add_words(conj, 2);
  conj->add_option("--budget", o.budget, "super summit set size limit");
  auto* sign = app.add_subcommand("sign", "Dehornoy sign of a braid");
  add_n(sign);
  add_words(sign, 1);
  auto* cmp = app.add_subcommand("cmp", "Dehornoy comparison a ? b");
  add_n(cmp);
  add_words(cmp, 2);
  auto* floor_cmd = app.add_subcommand("floor", "Dehornoy floor");
  add_n(floor_cmd);
  add_words(floor_cmd, 1);
  floor_cmd->add_flag("--word-length-bracket", o.word_length_bracket,
                      "search from the word-length bracket instead of the normal form");
  auto* fdtc = app.add_subcommand("fdtc", "FDTC interval and exact value");
  add_n(fdtc);
  add_words(fdtc, 1);
  add_fdtc_opts(fdtc);
  add_json(fdtc);
  auto* inv = app.add_subcommand("inv", "closure invariant report");
  add_n(inv);
  add_words(inv, 1);
  add_fdtc_opts(inv);
  add_json(inv);
  auto* defect = app.add_subcommand("defect", "quasimorphism defect scan");
  add_n(defect);
  defect->add_option("--functional", o.functional, "registered functional")->default_val("floor");
  defect->add_option("--maxlen", o.max_len, "word length bound")->default_val(4);
  defect->add_option("--random", o.random_pairs, "scan this many random pairs instead of all");
  defect->add_option("--seed", o.seed, "seed for --random");
  defect->add_option("--threads", o.threads, "worker threads")->default_val(1);
  add_fdtc_opts(defect);
  add_json(defect);
  auto* probe = app.add_subcommand("probe", "beam-search unboundedness probe");
  probe->add_option("--measure", o.measure_path, "measure file");
  probe->add_option("--functional", o.functional, "registered functional")->default_val("floor");
  probe->add_option("--maxlen", o.max_len, "longest product")->default_val(8);
  probe->add_option("--beam", o.beam, "beam width")->default_val(64);
  add_fdtc_opts(probe);
  auto* walk = app.add_subcommand("walk", "sample random walks and evaluate functionals");
  walk->add_option("--measure", o.measure_path, "measure file");
  walk->add_option("--seed", o.seed, "64-bit seed");
  walk->add_option("--trials", o.trials, "number of trials");
  walk->add_option("--steps", o.steps, "walk length");
  walk->add_option("--checkpoints", o.checkpoints, "comma-separated steps");
  walk->add_option("--functionals", o.functionals, "functional names")->delimiter(',');
  walk->add_option("--threads", o.threads, "worker threads")->default_val(1);
  add_fdtc_opts(walk);
  add_json(walk);
  auto* exp = app.add_subcommand("exp", "run a named experiment");
  exp->add_option("name", o.experiment, "fdtc-escape | genus-growth | conjugacy | transience | "
                                        "slice | alternating");
  exp->add_option("--measure", o.measure_path, "config file (measure plus key = value lines)");
  exp->add_option("--seed", o.seed, "64-bit seed");
  exp->add_option("--trials", o.trials, "number of trials");
  exp->add_option("--steps", o.steps, "walk length");
  exp->add_option("--checkpoints", o.checkpoints, "comma-separated steps");
  exp->add_option("--C", o.c, "threshold C as p/q");
  exp->add_option("--g", o.g, "genus g for transience");
  exp->add_option("--r", o.r, "FDTC threshold r as p/q for conjugacy");
  exp->add_option("--budget", o.budget, "conjugacy search budget");
  exp->add_option("--threads", o.threads, "worker threads")->default_val(1);
  exp->add_option("--replay", o.replay, "re-run the spec embedded in an earlier output");
  exp->add_option("--plot", o.plot, "write tidy plot data (CSV) to this file");
  add_fdtc_opts(exp);
  add_json(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (exp->parsed() && o.replay.empty() && o.experiment.empty()) {
      throw bw::ConfigError("exp needs an experiment name or --replay");
    }
    if (nf->parsed()) return cmd_nf(o);
    if (eq->parsed()) return cmd_eq(o);
    if (conj->parsed()) return cmd_conj(o);
    if (sign->parsed()) return cmd_sign(o);
    if (cmp->parsed()) return cmd_cmp(o);
    if (floor_cmd->parsed()) return cmd_floor(o);
    if (fdtc->parsed()) return cmd_fdtc(o);
    if (inv->parsed()) return cmd_inv(o);
    if (defect->parsed()) return cmd_defect(o);
    if (probe->parsed()) return cmd_probe(o);
    if (walk->parsed()) return cmd_walk(o);
    if (exp->parsed()) return cmd_exp(o);
  } catch (const bw::BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const bw::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const bw::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const bw::StrandMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
