#pragma once

#include <string_view>

#include "braidwalk/braid.hpp"
#include "braidwalk/rational.hpp"
#include "oracles.hpp"

namespace testing_util {

inline braidwalk::BraidWord W(std::string_view text, int n) {
  return braidwalk::parse_word_text(text, n);
}

inline braidwalk::BraidWord from(const oracle::Letters& letters, int n) {
  return braidwalk::BraidWord(n, letters);
}

inline braidwalk::Rational Q(long long p, long long q = 1) { return braidwalk::ratio(p, q); }

}  // namespace testing_util
