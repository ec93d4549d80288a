#include "braidwalk/quasimorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "braidwalk/dehornoy.hpp"
#include "braidwalk/error.hpp"
#include "braidwalk/garside.hpp"
#include "braidwalk/link_invariants.hpp"

namespace braidwalk {

namespace {

Rational from_int(long long v) { return ratio(v); }

}  // namespace

FunctionalRegistry FunctionalRegistry::standard(const FunctionalOptions& options) {
  FunctionalRegistry r;
  using K = FunctionalKind;
  r.add({"exponent_sum", K::kElement, "exponent sum e(w)",
         [](const BraidWord& w) { return std::optional(from_int(exponent_sum(w))); }});
  r.add({"floor", K::kElement, "Dehornoy floor",
         [](const BraidWord& w) {
           return std::optional(from_int(dehornoy::dehornoy_floor(w).floor));
         }});
  r.add({"fdtc", K::kElement, "FDTC: exact value, else the certified interval midpoint",
         [options](const BraidWord& w) {
           return std::optional(fdtc_exact(w, options.q_max, options.k_max, options.defect).value());
         }});
  r.add({"fdtc_genus_bound", K::kElement, "genus lower bound read off the FDTC estimate",
         [options](const BraidWord& w) {
           const auto est = fdtc_exact(w, options.q_max, options.k_max, options.defect);
           return std::optional(genus_lower_bound_from_fdtc(w, est));
         }});
  r.add({"signature", K::kElement, "signature of the closure",
         [](const BraidWord& w) { return std::optional(from_int(signature(w))); }});
  r.add({"components", K::kElement, "number of closure components",
         [](const BraidWord& w) { return std::optional(from_int(closure_component_count(w))); }});
  r.add({"genus_bound", K::kWord, "Seifert-algorithm genus of the diagram, summed over blocks",
         [](const BraidWord& w) { return std::optional(from_int(split_genus_upper_bound(w))); }});
  r.add({"s_mid", K::kWord, "midpoint of the s-interval (knots)",
         [](const BraidWord& w) -> std::optional<Rational> {
           if (closure_component_count(w) != 1) {
             return std::nullopt;
           }
           const auto s = s_interval(w);
           return ratio(s.lo + s.hi, 2);
         }});
  r.add({"g4_lower", K::kWord, "slice genus lower bound (knots)",
         [](const BraidWord& w) -> std::optional<Rational> {
           if (closure_component_count(w) != 1) {
             return std::nullopt;
           }
           return g4_lower_bound(invariant_report(w, std::nullopt, false));
         }});
  r.add({"nonalt", K::kWord, "1 when the non-alternating certificate fires (knots)",
         [](const BraidWord& w) -> std::optional<Rational> {
           if (closure_component_count(w) != 1) {
             return std::nullopt;
           }
           return from_int(nonalternating_certificate(invariant_report(w, std::nullopt, false)) ? 1 : 0);
         }});
  r.add({"length", K::kWord, "letter count",
         [](const BraidWord& w) {
           return std::optional(from_int(static_cast<long long>(w.size())));
         }});
  r.add({"sigma1_count", K::kWord, "number of sigma_1^{+-1} letters",
         [](const BraidWord& w) {
           return std::optional(from_int(sigma1_block_decomposition(w).sigma1_count()));
         }});
  r.add({"block_count", K::kWord, "blocks of the sigma_1 factorization",
         [](const BraidWord& w) {
           return std::optional(from_int(sigma1_block_decomposition(w).block_count()));
         }});
  return r;
}

void FunctionalRegistry::add(Functional f) {
  if (functionals_.count(f.name) != 0) {
    throw ConfigError("duplicate functional " + f.name);
  }
  std::string key = f.name;
  functionals_.emplace(std::move(key), std::move(f));
}

const Functional& FunctionalRegistry::get(std::string_view name) const {
  const auto it = functionals_.find(name);
  if (it == functionals_.end()) {
    throw ConfigError("unknown functional " + std::string(name));
  }
  return it->second;
}

bool FunctionalRegistry::contains(std::string_view name) const {
  return functionals_.find(name) != functionals_.end();
}

std::vector<std::string> FunctionalRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, f] : functionals_) {
    out.push_back(name);
  }
  return out;
}

namespace {

bool pair_less(const WordPair& a, const WordPair& b) {
  if (a.first.letters() != b.first.letters()) {
    return a.first.letters() < b.first.letters();
  }
  return a.second.letters() < b.second.letters();
}

struct PartialDefect {
  Rational best = 0;
  std::optional<std::size_t> argmax;
  std::size_t scanned = 0;
  std::size_t skipped = 0;
};

void merge_into(PartialDefect& acc, const PartialDefect& part, const std::vector<WordPair>& pairs) {
  acc.scanned += part.scanned;
  acc.skipped += part.skipped;
  if (!part.argmax) {
    return;
  }
  if (!acc.argmax || part.best > acc.best ||
      (part.best == acc.best && pair_less(pairs[*part.argmax], pairs[*acc.argmax]))) {
    acc.best = part.best;
    acc.argmax = part.argmax;
  }
}

}  // namespace

DefectReport defect_scan(const Functional& f, const std::vector<WordPair>& pairs,
                         std::string sample_description, int threads) {
  if (f.kind == FunctionalKind::kWord) {
    throw ConfigError(f.name + " is a word-level functional; defect claims need an element functional");
  }
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)),
                                                     pairs.size()));
  std::vector<PartialDefect> parts(workers);
  auto work = [&](std::size_t id) {
    auto& part = parts[id];
    for (std::size_t j = id; j < pairs.size(); j += workers) {
      const auto& [g, h] = pairs[j];
      const auto fg = f.evaluate(g);
      const auto fh = f.evaluate(h);
      const auto fgh = f.evaluate(compose(g, h));
      if (!fg || !fh || !fgh) {
        ++part.skipped;
        continue;
      }
      ++part.scanned;
      const Rational d = abs(*fgh - *fg - *fh);
      if (!part.argmax || d > part.best ||
          (d == part.best && pair_less(pairs[j], pairs[*part.argmax]))) {
        part.best = d;
        part.argmax = j;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < workers; ++id) {
      pool.emplace_back(work, id);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  PartialDefect total;
  for (const auto& part : parts) {
    merge_into(total, part, pairs);
  }
  DefectReport report;
  report.max_observed = total.best;
  if (total.argmax) {
    report.argmax = pairs[*total.argmax];
  }
  report.pairs_scanned = total.scanned;
  report.skipped = total.skipped;
  report.sample = std::move(sample_description);
  return report;
}

std::vector<BraidWord> enumerate_reduced_words(int strands, int max_len) {
  std::vector<Letter> alphabet;
  for (int i = 1; i < strands; ++i) {
    alphabet.push_back(-i);
    alphabet.push_back(i);
  }
  std::vector<BraidWord> out{BraidWord(strands)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t j = level_begin; j < level_end; ++j) {
      const std::vector<Letter> base = out[j].letters();
      for (Letter x : alphabet) {
        if (!base.empty() && base.back() == -x) {
          continue;
        }
        auto letters = base;
        letters.push_back(x);
        out.emplace_back(strands, std::move(letters));
      }
    }
    level_begin = level_end;
  }
  return out;
}

DefectReport exhaustive_defect_scan(const Functional& f, int strands, int max_len, int threads) {
  const auto words = enumerate_reduced_words(strands, max_len);
  std::vector<WordPair> pairs;
  pairs.reserve(words.size() * words.size());
  for (const auto& g : words) {
    for (const auto& h : words) {
      pairs.emplace_back(g, h);
    }
  }
  return defect_scan(f, pairs,
                     "exhaustive B_" + std::to_string(strands) + " reduced pairs, length <= " +
                         std::to_string(max_len),
                     threads);
}

BraidWord random_reduced_word(int strands, int length, SplitMix64& rng) {
  // Codes 0..2(n-1)-1 map to 1, -1, 2, -2, ...
  const auto alphabet = static_cast<std::uint64_t>(2 * (strands - 1));
  auto letter_of = [](std::uint64_t code) {
    const int index = static_cast<int>(code / 2) + 1;
    return code % 2 == 0 ? index : -index;
  };
  auto code_of = [](Letter x) {
    return 2 * static_cast<std::uint64_t>(std::abs(x) - 1) + (x > 0 ? 0 : 1);
  };
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(std::max(length, 0)));
  for (int j = 0; j < length; ++j) {
    if (letters.empty()) {
      letters.push_back(letter_of(rng.below(alphabet)));
      continue;
    }
    // Uniform over the codes other than the inverse of the last letter.
    const std::uint64_t banned = code_of(-letters.back());
    std::uint64_t code = rng.below(alphabet - 1);
    if (code >= banned) {
      ++code;
    }
    letters.push_back(letter_of(code));
  }
  return BraidWord(strands, std::move(letters));
}

std::vector<WordPair> random_pairs(int strands, std::size_t count, int max_len, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<WordPair> out;
  out.reserve(count);
  const auto span = static_cast<std::uint64_t>(max_len + 1);
  for (std::size_t j = 0; j < count; ++j) {
    auto g = random_reduced_word(strands, static_cast<int>(rng.below(span)), rng);
    auto h = random_reduced_word(strands, static_cast<int>(rng.below(span)), rng);
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

RationalInterval homogenize(const Functional& f, const BraidWord& w, long long k,
                            const Rational& defect) {
  if (k < 1) {
    throw Error("power must be >= 1");
  }
  const auto value = f.evaluate(power(w, k));
  if (!value) {
    throw UndefinedInvariant(f.name + " is undefined on the power");
  }
  const Rational center = *value / ratio(k);
  const Rational radius = defect / ratio(k);
  return {center - radius, center + radius};
}

ProbeResult unboundedness_probe(const Measure& measure, const Functional& f, int max_len,
                                std::size_t beam_width) {
  struct Candidate {
    BraidWord word;
    std::optional<Rational> score;  // |f|
    std::string key;
  };
  auto key_of = [&](const BraidWord& w) {
    if (f.kind == FunctionalKind::kElement) {
      return garside::left_normal_form(w).key();
    }
    return to_string(w);
  };
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.score.has_value() != b.score.has_value()) {
      return a.score.has_value();
    }
    if (a.score && *a.score != *b.score) {
      return *a.score > *b.score;
    }
    return a.key < b.key;
  };

  ProbeResult result;
  std::vector<Candidate> beam{{BraidWord(measure.strands), std::nullopt, {}}};
  Rational running = 0;
  bool seen_value = false;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Candidate> next;
    std::set<std::string> seen;
    for (const auto& c : beam) {
      for (const auto& atom : measure.atoms) {
        BraidWord w = compose(c.word, atom.word);
        std::string key = key_of(w);
        if (!seen.insert(key).second) {
          continue;
        }
        auto v = f.evaluate(w);
        std::optional<Rational> score;
        if (v) {
          score = abs(*v);
        }
        next.push_back({std::move(w), std::move(score), std::move(key)});
      }
    }
    std::sort(next.begin(), next.end(), better);
    if (next.size() > beam_width) {
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(beam_width), next.end());
    }
    if (!next.empty() && next.front().score) {
      if (!seen_value || *next.front().score > running) {
        running = *next.front().score;
      }
      seen_value = true;
    }
    result.rows.push_back({len, running});
    beam = std::move(next);
  }
  const std::size_t rows = result.rows.size();
  if (rows >= 2) {
    const std::size_t tail = std::max<std::size_t>(2, (rows + 1) / 2);
    result.increasing_tail = true;
    for (std::size_t j = rows - tail + 1; j < rows; ++j) {
      if (result.rows[j].max_abs <= result.rows[j - 1].max_abs) {
        result.increasing_tail = false;
      }
    }
  }
  return result;
}

}  // namespace braidwalk
