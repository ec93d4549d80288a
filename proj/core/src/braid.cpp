#include "braidwalk/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidwalk/error.hpp"

namespace braidwalk {

namespace {

void check_strands(int strands) {
  if (strands < 2) {
    throw Error("braid groups need at least 2 strands, got " +
                std::to_string(strands));
  }
}

void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch(a.strands(), b.strands());
  }
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) {
      tokens.push_back(text.substr(i, j - i));
    }
    i = j;
  }
  return tokens;
}

long long parse_integer_token(std::string_view token) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
  }
  long long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  return value;
}

Letter parse_letter(std::string_view token, int strands) {
  const long long v = parse_integer_token(token);
  if (v == 0) {
    throw ParseError("zero is not a generator index");
  }
  if (std::llabs(v) > strands - 1) {
    throw ParseError("generator index " + std::to_string(v) +
                     " out of range 1.." + std::to_string(strands - 1));
  }
  return static_cast<Letter>(v);
}

// Appends `letter` to a freely reduced buffer, keeping it freely reduced.
void push_reduced(std::vector<Letter>& out, Letter letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (Letter x : letters_) {
    if (x == 0 || std::abs(x) > strands - 1) {
      throw ParseError("letter " + std::to_string(x) + " out of range for B_" +
                       std::to_string(strands));
    }
  }
}

BraidWord parse_word(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<Letter> letters;
  for (auto token : split_tokens(text)) {
    letters.push_back(parse_letter(token, strands));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord parse_word_text(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<Letter> letters;
  for (auto token : split_tokens(text)) {
    if (token.starts_with("D2")) {
      long long k = 1;
      auto rest = token.substr(2);
      if (!rest.empty()) {
        if (rest.front() != '^') {
          throw ParseError("malformed macro '" + std::string(token) + "'");
        }
        k = parse_integer_token(rest.substr(1));
      }
      const auto twist = full_twist_power(strands, k);
      letters.insert(letters.end(), twist.letters().begin(), twist.letters().end());
    } else {
      letters.push_back(parse_letter(token, strands));
    }
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(v)]) {
      throw Error("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j)) {
      return false;
    }
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    push_reduced(out, x);
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  check_same_strands(a, b);
  std::vector<Letter> out(a.letters());
  out.reserve(a.size() + b.size());
  for (Letter x : b.letters()) {
    push_reduced(out, x);
  }
  return free_reduce(BraidWord(a.strands(), std::move(out)));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& x : out) {
    x = -x;
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord power(const BraidWord& w, long long m) {
  if (m < 0) {
    return power(inverse(w), -m);
  }
  const BraidWord base = free_reduce(w);
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    for (Letter x : base.letters()) {
      push_reduced(out, x);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& g, const BraidWord& w) {
  return compose(compose(g, w), inverse(g));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<Letter> out(w.letters());
  for (auto& x : out) {
    x = -x;
  }
  return BraidWord(w.strands(), std::move(out));
}

long long exponent_sum(const BraidWord& w) noexcept {
  long long e = 0;
  for (Letter x : w.letters()) {
    e += x > 0 ? 1 : -1;
  }
  return e;
}

Permutation permutation(const BraidWord& w) {
  const int n = w.strands();
  // at[p] = strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(n));
  std::iota(at.begin(), at.end(), 0);
  for (Letter x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    images[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  }
  return Permutation(std::move(images));
}

int closure_component_count(const BraidWord& w) { return permutation(w).cycle_count(); }

bool is_positive(const BraidWord& w) noexcept {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](Letter x) { return x > 0; });
}

BraidWord half_twist(int n) {
  check_strands(n);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      out.push_back(i);
    }
  }
  return BraidWord(n, std::move(out));
}

BraidWord full_twist_power(int n, long long k) {
  const BraidWord delta = half_twist(n);
  if (k < 0) {
    return power(inverse(delta), 2 * -k);
  }
  return power(delta, 2 * k);
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error("stabilization sign must be +1 or -1");
  }
  std::vector<Letter> out(w.letters());
  out.push_back(sign * w.strands());
  return BraidWord(w.strands() + 1, std::move(out));
}

int BlockDecomposition::block_count() const noexcept {
  int count = sigma1_count();
  for (const auto& s : segments) {
    count += s.empty() ? 0 : 1;
  }
  return count;
}

BraidWord BlockDecomposition::concatenate() const {
  std::vector<Letter> out;
  for (std::size_t j = 0; j < segments.size(); ++j) {
    out.insert(out.end(), segments[j].letters().begin(), segments[j].letters().end());
    if (j < sigma1_letters.size()) {
      out.push_back(sigma1_letters[j]);
    }
  }
  return BraidWord(segments.front().strands(), std::move(out));
}

BlockDecomposition sigma1_block_decomposition(const BraidWord& w) {
  BlockDecomposition d;
  std::vector<Letter> current;
  for (Letter x : w.letters()) {
    if (std::abs(x) == 1) {
      d.segments.emplace_back(w.strands(), std::move(current));
      d.sigma1_letters.push_back(x);
      current.clear();
    } else {
      current.push_back(x);
    }
  }
  d.segments.emplace_back(w.strands(), std::move(current));
  return d;
}

}  // namespace braidwalk
