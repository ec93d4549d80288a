#pragma once

// Braid words in the Artin generators of B_n.
//
// A letter is a signed generator index: i encodes sigma_i and -i encodes
// sigma_i^{-1}, with 1 <= |i| <= n-1. Words are plain letter sequences; no
// operation normalizes beyond free reduction unless it says so.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace braidwalk {

using Letter = int;

class BraidWord {
 public:
  // The empty word in B_strands. Throws Error when strands < 2.
  explicit BraidWord(int strands);
  // Throws ParseError if some letter is zero or out of range.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Letter-for-letter equality; group equality lives in garside::equals.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

// Whitespace-separated signed integers ("1 -2 1"). Strict: rejects zero,
// out-of-range indices and non-integer tokens.
BraidWord parse_word(std::string_view text, int strands);

// Same as parse_word but also expands the macro token "D2^k" (k a signed
// integer, "D2" meaning k = 1) into full_twist_power(strands, k).
BraidWord parse_word_text(std::string_view text, int strands);

// Inverse of parse_word: "1 -2 1"; the empty word renders as "".
std::string to_string(const BraidWord& w);

// Underlying permutation: image[j] is the final position of the strand that
// starts at position j (0-based), reading the word left to right.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator[](int j) const { return images_[static_cast<std::size_t>(j)]; }
  bool is_identity() const noexcept;
  int cycle_count() const;
  // Sorted cycle lengths, a conjugacy invariant of the braid.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Removes adjacent pairs s s^{-1} until none remain.
BraidWord free_reduce(const BraidWord& w);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, long long m);
// g * w * g^{-1}
BraidWord conjugate(const BraidWord& g, const BraidWord& w);
// Flips every letter sign; the closure is the mirror image.
BraidWord mirror(const BraidWord& w);

long long exponent_sum(const BraidWord& w) noexcept;
Permutation permutation(const BraidWord& w);
int closure_component_count(const BraidWord& w);
bool is_positive(const BraidWord& w) noexcept;

// Delta = (s1 s2 ... s_{n-1})(s1 ... s_{n-2}) ... (s1), a positive word.
BraidWord half_twist(int n);
// Delta^{2k}; negative k gives the inverse word.
BraidWord full_twist_power(int n, long long k);

// w * sigma_n^{sign} in B_{n+1}.
BraidWord markov_stabilize(const BraidWord& w, int sign);

// Splitting of a word at every sigma_1^{+-1}: segments[0] s[0] segments[1]
// s[1] ... segments[m], where each s[j] is a single letter +-1 and no segment
// contains a sigma_1 letter.
struct BlockDecomposition {
  std::vector<BraidWord> segments;
  std::vector<Letter> sigma1_letters;

  int sigma1_count() const noexcept {
    return static_cast<int>(sigma1_letters.size());
  }
  // Non-empty segments plus sigma_1 letters; at most 2 * sigma1_count() + 1.
  int block_count() const noexcept;
  BraidWord concatenate() const;
};

BlockDecomposition sigma1_block_decomposition(const BraidWord& w);

}  // namespace braidwalk
