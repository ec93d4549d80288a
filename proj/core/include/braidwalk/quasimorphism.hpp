#pragma once

// Named braid functionals and the quasimorphism tooling built on them:
// defect scans, homogenization and beam-search unboundedness probes.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/fdtc.hpp"
#include "braidwalk/measure.hpp"
#include "braidwalk/rational.hpp"

namespace braidwalk {

// kElement functionals depend only on the group element, so defect claims
// about them are meaningful. kWord functionals read the diagram (letter
// counts, positivity) and are refused by defect_scan.
enum class FunctionalKind { kElement, kWord };

// nullopt means "undefined here" (e.g. s on a link), never an error.
using Evaluator = std::function<std::optional<Rational>(const BraidWord&)>;

struct Functional {
  std::string name;
  FunctionalKind kind = FunctionalKind::kElement;
  std::string description;
  Evaluator evaluate;
};

struct FunctionalOptions {
  long long q_max = 10;
  long long k_max = 64;
  Rational defect = kDefaultDefectBound;
};

class FunctionalRegistry {
 public:
  // exponent_sum, floor, fdtc, fdtc_genus_bound, signature, components,
  // genus_bound, s_mid, g4_lower, nonalt, length, sigma1_count, block_count.
  static FunctionalRegistry standard(const FunctionalOptions& options = {});

  // Throws ConfigError on a duplicate name.
  void add(Functional f);
  // Throws ConfigError on an unknown name.
  const Functional& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Functional, std::less<>> functionals_;
};

using WordPair = std::pair<BraidWord, BraidWord>;

struct DefectReport {
  Rational max_observed;
  std::optional<WordPair> argmax;
  std::size_t pairs_scanned = 0;
  // Pairs where f was undefined on g, h or gh.
  std::size_t skipped = 0;
  std::string sample;
};

// max |f(gh) - f(g) - f(h)| over the pairs. Ties keep the lexicographically
// smallest pair, so the report does not depend on `threads`.
DefectReport defect_scan(const Functional& f, const std::vector<WordPair>& pairs,
                         std::string sample_description, int threads = 1);

// All freely reduced words of length <= max_len, shortest first, then
// lexicographic in the letter order -1, 1, -2, 2, ...
std::vector<BraidWord> enumerate_reduced_words(int strands, int max_len);

DefectReport exhaustive_defect_scan(const Functional& f, int strands, int max_len,
                                    int threads = 1);

// Uniform freely reduced word of exactly `length` letters.
BraidWord random_reduced_word(int strands, int length, SplitMix64& rng);

// count pairs with lengths uniform on [0, max_len], from the given seed.
std::vector<WordPair> random_pairs(int strands, std::size_t count, int max_len,
                                   std::uint64_t seed);

// [f(w^k)/k - D/k, f(w^k)/k + D/k]. Throws UndefinedInvariant when f is
// undefined on w^k.
RationalInterval homogenize(const Functional& f, const BraidWord& w, long long k,
                            const Rational& defect);

struct ProbeRow {
  int length = 0;
  Rational max_abs;  // running maximum, so rows are non-decreasing
};

struct ProbeResult {
  std::vector<ProbeRow> rows;
  // The last half of the table (at least two rows) increases strictly.
  // Evidence only: no finite table proves unboundedness.
  bool increasing_tail = false;
};

// Beam search over products of L support atoms, L = 1..max_len. Each level
// keeps the beam_width products with the largest |f| (deduplicated by normal
// form for element functionals).
ProbeResult unboundedness_probe(const Measure& measure, const Functional& f, int max_len,
                                std::size_t beam_width = 64);

}  // namespace braidwalk
