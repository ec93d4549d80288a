#pragma once

// Garside structure of B_n: permutation braids, left normal forms and
// conjugacy via super summit sets.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidwalk/braid.hpp"

namespace braidwalk::garside {

inline constexpr int kMaxStrands = 32;
inline constexpr std::size_t kDefaultConjugacyBudget = 10'000;

// A positive braid in which every pair of strands crosses at most once,
// stored as its permutation: image(j) is the final position of the strand
// starting at position j (0-based).
class SimpleElement {
 public:
  static SimpleElement identity(int n);
  static SimpleElement delta(int n);
  // sigma_i, 1 <= i <= n-1
  static SimpleElement generator(int n, int i);
  // Delta * sigma_i^{-1}, the simple element standing in for a negative letter.
  static SimpleElement delta_over_generator(int n, int i);
  static SimpleElement from_images(const std::vector<int>& images);

  int strands() const noexcept { return n_; }
  int image(int j) const noexcept { return image_[static_cast<std::size_t>(j)]; }
  std::vector<int> images() const;

  bool is_identity() const noexcept;
  bool is_delta() const noexcept;
  // Number of crossings, i.e. letters of any positive word for it.
  int length() const noexcept;

  // Bit i (0-based) set iff sigma_{i+1} is a prefix.
  std::uint32_t starting_set() const noexcept;
  // Bit i set iff sigma_{i+1} is a suffix.
  std::uint32_t finishing_set() const noexcept;

  // Delta A Delta^{-1}
  SimpleElement tau() const noexcept;
  SimpleElement tau_power(long long p) const noexcept { return (p & 1) ? tau() : *this; }
  // A^{-1} Delta
  SimpleElement right_complement() const noexcept;

  // this * sigma_{i+1}; caller guarantees the result is simple.
  void append_generator(int i0) noexcept;
  // sigma_{i+1}^{-1} * this; caller guarantees i0 is in the starting set.
  void drop_leading_generator(int i0) noexcept;

  BraidWord word() const;

  friend bool operator==(const SimpleElement& a, const SimpleElement& b) noexcept {
    return a.n_ == b.n_ && a.image_ == b.image_;
  }

 private:
  std::array<std::uint8_t, kMaxStrands> image_{};
  std::uint8_t n_ = 0;
};

// Delta^p A_1 ... A_k with every A_j a proper simple element (neither the
// identity nor Delta) and every adjacent pair left-weighted.
struct NormalForm {
  int strands = 2;
  long long delta_power = 0;
  std::vector<SimpleElement> factors;

  long long inf() const noexcept { return delta_power; }
  long long sup() const noexcept {
    return delta_power + static_cast<long long>(factors.size());
  }
  std::size_t canonical_length() const noexcept { return factors.size(); }
  bool is_trivial() const noexcept { return delta_power == 0 && factors.empty(); }
  // Byte key, identical iff the normal forms are identical.
  std::string key() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Makes (a, b) left-weighted in place by moving crossings from b into a.
// Returns true if anything moved.
bool make_left_weighted(SimpleElement& a, SimpleElement& b) noexcept;
bool is_left_weighted(const SimpleElement& a, const SimpleElement& b) noexcept;

NormalForm left_normal_form(const BraidWord& w);
BraidWord to_word(const NormalForm& nf);

NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm inverse(const NormalForm& x);
NormalForm power(const NormalForm& x, long long k);
// s^{-1} x s for a simple s
NormalForm conjugate_by_simple(const NormalForm& x, const SimpleElement& s);

bool equals(const BraidWord& a, const BraidWord& b);
std::pair<long long, long long> inf_sup(const BraidWord& w);

// Conjugate y = c^{-1} x c of x together with the right conjugator c.
struct ConjugatedForm {
  NormalForm element;
  BraidWord conjugator;
};

ConjugatedForm cycling(const NormalForm& x);
ConjugatedForm decycling(const NormalForm& x);
// Iterated cycling then decycling until inf is maximal and sup minimal in
// the conjugacy class.
ConjugatedForm super_summit_representative(const NormalForm& x);

// The super summit set of x, closed under conjugation by simple elements.
// Throws BudgetExceeded past `budget` elements.
std::vector<NormalForm> super_summit_set(const NormalForm& x,
                                         std::size_t budget = kDefaultConjugacyBudget);

struct ConjugacyCertificate {
  bool conjugate = false;
  // c with c a c^{-1} = b
  std::optional<BraidWord> witness;
  std::size_t orbit_size = 0;
};

// Decides conjugacy of a and b in B_n (n <= 8). Throws StrandMismatch, and
// BudgetExceeded when the summit orbit outgrows `budget` (inconclusive).
ConjugacyCertificate are_conjugate(const BraidWord& a, const BraidWord& b,
                                   std::size_t budget = kDefaultConjugacyBudget);

}  // namespace braidwalk::garside
