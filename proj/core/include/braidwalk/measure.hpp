#pragma once

// Finitely supported probability measures on B_n.
//
// File format, one item per line:
//   n=<strands>
//   <weight p/q> <word text>      (word text may use the D2^k macro)
// Blank lines and '#' comments are ignored.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/rational.hpp"
#include "braidwalk/rng.hpp"

namespace braidwalk {

struct Atom {
  BraidWord word;
  Rational weight;
  // Source text of the word ("D2^-1", "1 -2"); used when writing the measure.
  std::string label;
};

struct Measure {
  int strands = 2;
  std::vector<Atom> atoms;
};

// Canonicalized copy. Throws ConfigError on an empty support, a non-positive
// weight or a total other than exactly 1; StrandMismatch when an atom lives
// in another braid group.
Measure validate_measure(Measure m);

// Parses and validates. Throws ParseError on malformed lines.
Measure parse_measure(std::string_view text);
std::string format_measure(const Measure& m);

// Exact draws: weights scaled to integers over their common denominator.
class AtomSampler {
 public:
  // Throws ConfigError when the common denominator exceeds 64 bits.
  explicit AtomSampler(const Measure& m);

  std::size_t draw(SplitMix64& rng) const;
  std::uint64_t denominator() const noexcept { return total_; }

 private:
  std::vector<std::uint64_t> cumulative_;
  std::uint64_t total_ = 0;
};

}  // namespace braidwalk
