#include "braidwalk/dehornoy.hpp"

#include <cstdlib>
#include <vector>

#include "braidwalk/error.hpp"

namespace braidwalk::dehornoy {

namespace {

constexpr int kNil = -1;

// Doubly linked letter list. Each node also caches `lower`, the nearest
// earlier node whose generator index is <= its own; chasing these links
// finds the opening letter of a candidate handle in amortized O(1).
class LetterList {
 public:
  explicit LetterList(const std::vector<Letter>& letters) {
    nodes_.reserve(letters.size() * 2 + 16);
    for (Letter x : letters) {
      insert_after(tail_, x);
    }
  }

  int head() const noexcept { return head_; }
  int next(int i) const noexcept { return nodes_[static_cast<std::size_t>(i)].next; }
  int prev(int i) const noexcept { return nodes_[static_cast<std::size_t>(i)].prev; }
  Letter letter(int i) const noexcept { return nodes_[static_cast<std::size_t>(i)].x; }
  void set_letter(int i, Letter x) noexcept { nodes_[static_cast<std::size_t>(i)].x = x; }
  int lower(int i) const noexcept { return nodes_[static_cast<std::size_t>(i)].lower; }
  void set_lower(int i, int v) noexcept { nodes_[static_cast<std::size_t>(i)].lower = v; }
  std::size_t size() const noexcept { return size_; }

  int insert_after(int pos, Letter x) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      nodes_[static_cast<std::size_t>(id)] = Node{x, kNil, kNil, kNil};
    } else {
      id = static_cast<int>(nodes_.size());
      nodes_.push_back(Node{x, kNil, kNil, kNil});
    }
    auto& node = nodes_[static_cast<std::size_t>(id)];
    node.prev = pos;
    node.next = pos == kNil ? head_ : next(pos);
    if (node.next != kNil) {
      nodes_[static_cast<std::size_t>(node.next)].prev = id;
    } else {
      tail_ = id;
    }
    if (pos != kNil) {
      nodes_[static_cast<std::size_t>(pos)].next = id;
    } else {
      head_ = id;
    }
    ++size_;
    return id;
  }

  void erase(int id) {
    auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.prev != kNil) {
      nodes_[static_cast<std::size_t>(node.prev)].next = node.next;
    } else {
      head_ = node.next;
    }
    if (node.next != kNil) {
      nodes_[static_cast<std::size_t>(node.next)].prev = node.prev;
    } else {
      tail_ = node.prev;
    }
    free_.push_back(id);
    --size_;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(size_);
    for (int i = head_; i != kNil; i = next(i)) {
      out.push_back(letter(i));
    }
    return out;
  }

 private:
  struct Node {
    Letter x;
    int prev;
    int next;
    int lower;
  };
  std::vector<Node> nodes_;
  std::vector<int> free_;
  int head_ = kNil;
  int tail_ = kNil;
  std::size_t size_ = 0;
};

// Opening letter of the handle closed by `c`, or kNil. Also refreshes the
// cached `lower` link of c.
int find_opening(LetterList& list, int c) {
  const int i = std::abs(list.letter(c));
  int r = list.prev(c);
  while (r != kNil && std::abs(list.letter(r)) > i) {
    r = list.lower(r);
  }
  list.set_lower(c, r);
  if (r != kNil && std::abs(list.letter(r)) == i &&
      (list.letter(r) > 0) != (list.letter(c) > 0)) {
    return r;
  }
  return kNil;
}

OrderSign sign_of_reduced(const std::vector<Letter>& letters) {
  if (letters.empty()) {
    return OrderSign::kZero;
  }
  Letter lowest = letters.front();
  for (Letter x : letters) {
    if (std::abs(x) < std::abs(lowest)) {
      lowest = x;
    }
  }
  return lowest > 0 ? OrderSign::kPositive : OrderSign::kNegative;
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, std::size_t step_budget, ReductionStats* stats) {
  LetterList list(w.letters());
  std::size_t steps = 0;
  std::size_t peak = list.size();
  int cursor = list.head();
  while (cursor != kNil) {
    const int c = cursor;
    const int r = find_opening(list, c);
    if (r == kNil) {
      cursor = list.next(c);
      continue;
    }
    if (++steps > step_budget) {
      throw BudgetExceeded("handle reduction exceeded " + std::to_string(step_budget) +
                           " steps");
    }
    // s_i^e v s_i^{-e}: drop the ends, and each s_{i+1}^d in v becomes
    // s_{i+1}^{-e} s_i^d s_{i+1}^e.
    const int i = std::abs(list.letter(r));
    const int e = list.letter(r) > 0 ? 1 : -1;
    const int before = list.prev(r);
    for (int y = list.next(r); y != c;) {
      const int following = list.next(y);
      const Letter x = list.letter(y);
      if (std::abs(x) == i + 1) {
        const int d = x > 0 ? 1 : -1;
        list.set_letter(y, -e * (i + 1));
        const int mid = list.insert_after(y, d * i);
        list.insert_after(mid, e * (i + 1));
      }
      y = following;
    }
    list.erase(r);
    list.erase(c);
    peak = std::max(peak, list.size());
    cursor = before == kNil ? list.head() : list.next(before);
  }
  if (stats != nullptr) {
    stats->steps = steps;
    stats->peak_length = peak;
  }
  return BraidWord(w.strands(), list.letters());
}

bool is_handle_free(const BraidWord& w) {
  LetterList list(w.letters());
  for (int c = list.head(); c != kNil; c = list.next(c)) {
    if (find_opening(list, c) != kNil) {
      return false;
    }
  }
  return true;
}

OrderSign order_sign(const BraidWord& w, std::size_t step_budget) {
  return sign_of_reduced(handle_reduce(free_reduce(w), step_budget).letters());
}

Comparison compare(const BraidWord& a, const BraidWord& b, std::size_t step_budget) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch(a.strands(), b.strands());
  }
  switch (order_sign(compose(inverse(a), b), step_budget)) {
    case OrderSign::kPositive:
      return Comparison::kLess;
    case OrderSign::kNegative:
      return Comparison::kGreater;
    case OrderSign::kZero:
      break;
  }
  return Comparison::kEqual;
}

namespace {

long long floor_div2(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// Sign of Delta^q P where P = A_1 ... A_r is the positive tail of a normal
// form. For -r < q < 0 the word is written as a left fraction N^{-1} P' with
// N^{-1} = prod_{j <= m} tau^{m-j}(dA_j)^{-1}, m = -q and dA = A^{-1} Delta;
// this avoids the long Delta^{-1} ... A handles of the literal product.
OrderSign residual_sign(const garside::NormalForm& nf, long long q, std::size_t step_budget) {
  const auto r = static_cast<long long>(nf.canonical_length());
  if (q >= 0) {
    return (q == 0 && r == 0) ? OrderSign::kZero : OrderSign::kPositive;
  }
  if (q + r <= 0) {
    // P is a prefix of Delta^r, so Delta^q P is the inverse of a positive braid.
    return OrderSign::kNegative;
  }
  const long long m = -q;
  std::vector<Letter> letters;
  for (long long j = 1; j <= m; ++j) {
    const auto denominator =
        nf.factors[static_cast<std::size_t>(j - 1)].right_complement().tau_power(m - j);
    const auto inv = inverse(denominator.word());
    letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
  }
  for (long long j = m; j < r; ++j) {
    const auto fw = nf.factors[static_cast<std::size_t>(j)].word();
    letters.insert(letters.end(), fw.letters().begin(), fw.letters().end());
  }
  return order_sign(BraidWord(nf.strands, std::move(letters)), step_budget);
}

FloorValue floor_by_word_length(const BraidWord& w, std::size_t step_budget) {
  const int n = w.strands();
  const auto len = static_cast<long long>(w.size());
  long long lo = -len - 1;
  long long hi = len + 1;
  while (compare(full_twist_power(n, lo), w, step_budget) == Comparison::kGreater) {
    lo *= 2;
  }
  while (compare(w, full_twist_power(n, hi), step_budget) != Comparison::kLess) {
    hi *= 2;
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (compare(full_twist_power(n, mid), w, step_budget) != Comparison::kGreater) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo};
}

}  // namespace

FloorValue dehornoy_floor(const garside::NormalForm& nf, std::size_t step_budget) {
  const long long p = nf.delta_power;
  const auto r = static_cast<long long>(nf.canonical_length());
  // Delta^p <= x <= Delta^{p+r}
  long long lo = floor_div2(p);
  long long hi = floor_div2(p + r) + 1;
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (residual_sign(nf, p - 2 * mid, step_budget) != OrderSign::kNegative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo};
}

FloorValue dehornoy_floor(const BraidWord& w, FloorBracket bracket, std::size_t step_budget) {
  if (bracket == FloorBracket::kWordLength) {
    return floor_by_word_length(free_reduce(w), step_budget);
  }
  return dehornoy_floor(garside::left_normal_form(w), step_budget);
}

}  // namespace braidwalk::dehornoy
