#pragma once

// Dehornoy ordering of B_n through handle reduction.
//
// beta > 1 iff beta has a word in which the lowest-index generator occurs
// only positively. Handle reduction turns any word into such a
// representative (or the empty word) without leaving the group element.

#include <cstddef>

#include "braidwalk/braid.hpp"
#include "braidwalk/garside.hpp"

namespace braidwalk::dehornoy {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

enum class OrderSign { kNegative = -1, kZero = 0, kPositive = 1 };
enum class Comparison { kLess = -1, kEqual = 0, kGreater = 1 };

struct ReductionStats {
  std::size_t steps = 0;
  std::size_t peak_length = 0;
};

// Handle-free word equal to w. Each step reduces the handle whose right end
// is leftmost; such a handle never contains another handle, so it is always
// permitted. Throws BudgetExceeded after `step_budget` reductions.
BraidWord handle_reduce(const BraidWord& w, std::size_t step_budget = kDefaultStepBudget,
                        ReductionStats* stats = nullptr);

// True iff no subword s_i^e v s_i^{-e} with v free of s_j (j <= i) exists.
bool is_handle_free(const BraidWord& w);

OrderSign order_sign(const BraidWord& w, std::size_t step_budget = kDefaultStepBudget);

// a < b iff a^{-1} b is sigma-positive.
Comparison compare(const BraidWord& a, const BraidWord& b,
                   std::size_t step_budget = kDefaultStepBudget);

enum class FloorBracket {
  // Bracket from inf/sup of the left normal form (positive braids are
  // sigma-positive), binary search on the residual.
  kNormalForm,
  // Bracket [-len-1, len+1] widened by doubling until verified by compare,
  // binary search with compare against full twists. Uses handle reduction only.
  kWordLength,
};

struct FloorValue {
  long long floor = 0;
};

// Unique m with Delta^{2m} <= w < Delta^{2(m+1)}.
FloorValue dehornoy_floor(const BraidWord& w, FloorBracket bracket = FloorBracket::kNormalForm,
                          std::size_t step_budget = kDefaultStepBudget);
FloorValue dehornoy_floor(const garside::NormalForm& nf,
                          std::size_t step_budget = kDefaultStepBudget);

}  // namespace braidwalk::dehornoy
