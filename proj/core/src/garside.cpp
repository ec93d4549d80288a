#include "braidwalk/garside.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "braidwalk/error.hpp"

namespace braidwalk::garside {

namespace {

void check_garside_strands(int n) {
  if (n < 2 || n > kMaxStrands) {
    throw Error("Garside machinery supports 2 <= n <= " + std::to_string(kMaxStrands));
  }
}

// Appends a simple element to a left-weighted factor list, restoring
// left-weightedness by sweeping leftwards.
void append_simple(std::vector<SimpleElement>& factors, const SimpleElement& x) {
  if (x.is_identity()) {
    return;
  }
  factors.push_back(x);
  for (std::size_t j = factors.size() - 1; j > 0; --j) {
    if (!make_left_weighted(factors[j - 1], factors[j])) {
      break;
    }
  }
  while (!factors.empty() && factors.back().is_identity()) {
    factors.pop_back();
  }
}

// Moves leading Delta factors into the Delta exponent.
void absorb_deltas(NormalForm& nf) {
  std::size_t d = 0;
  while (d < nf.factors.size() && nf.factors[d].is_delta()) {
    ++d;
  }
  if (d > 0) {
    nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<std::ptrdiff_t>(d));
    nf.delta_power += static_cast<long long>(d);
  }
}

void append_letters(std::vector<Letter>& out, const BraidWord& w) {
  out.insert(out.end(), w.letters().begin(), w.letters().end());
}

BraidWord simple_inverse_word(const SimpleElement& s) { return inverse(s.word()); }

}  // namespace

SimpleElement SimpleElement::identity(int n) {
  check_garside_strands(n);
  SimpleElement s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) {
    s.image_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j);
  }
  return s;
}

SimpleElement SimpleElement::delta(int n) {
  SimpleElement s = identity(n);
  for (int j = 0; j < n; ++j) {
    s.image_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(n - 1 - j);
  }
  return s;
}

SimpleElement SimpleElement::generator(int n, int i) {
  SimpleElement s = identity(n);
  if (i < 1 || i > n - 1) {
    throw Error("generator index out of range");
  }
  std::swap(s.image_[static_cast<std::size_t>(i - 1)], s.image_[static_cast<std::size_t>(i)]);
  return s;
}

SimpleElement SimpleElement::delta_over_generator(int n, int i) {
  SimpleElement s = identity(n);
  if (i < 1 || i > n - 1) {
    throw Error("generator index out of range");
  }
  for (int j = 0; j < n; ++j) {
    int v = n - 1 - j;
    if (v == i - 1) {
      v = i;
    } else if (v == i) {
      v = i - 1;
    }
    s.image_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(v);
  }
  return s;
}

SimpleElement SimpleElement::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  SimpleElement s = identity(n);
  (void)Permutation(images);  // validates bijectivity
  for (int j = 0; j < n; ++j) {
    s.image_[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(images[static_cast<std::size_t>(j)]);
  }
  return s;
}

std::vector<int> SimpleElement::images() const {
  return std::vector<int>(image_.begin(), image_.begin() + n_);
}

bool SimpleElement::is_identity() const noexcept {
  for (int j = 0; j < n_; ++j) {
    if (image_[static_cast<std::size_t>(j)] != j) {
      return false;
    }
  }
  return true;
}

bool SimpleElement::is_delta() const noexcept {
  for (int j = 0; j < n_; ++j) {
    if (image_[static_cast<std::size_t>(j)] != n_ - 1 - j) {
      return false;
    }
  }
  return true;
}

int SimpleElement::length() const noexcept {
  int count = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      count += image_[static_cast<std::size_t>(a)] > image_[static_cast<std::size_t>(b)] ? 1 : 0;
    }
  }
  return count;
}

std::uint32_t SimpleElement::starting_set() const noexcept {
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < n_; ++i) {
    if (image_[static_cast<std::size_t>(i)] > image_[static_cast<std::size_t>(i + 1)]) {
      mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

std::uint32_t SimpleElement::finishing_set() const noexcept {
  std::array<std::uint8_t, kMaxStrands> inv{};
  for (int j = 0; j < n_; ++j) {
    inv[image_[static_cast<std::size_t>(j)]] = static_cast<std::uint8_t>(j);
  }
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < n_; ++i) {
    if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i + 1)]) {
      mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

SimpleElement SimpleElement::tau() const noexcept {
  SimpleElement s = *this;
  for (int j = 0; j < n_; ++j) {
    s.image_[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>(n_ - 1 - image_[static_cast<std::size_t>(n_ - 1 - j)]);
  }
  return s;
}

SimpleElement SimpleElement::right_complement() const noexcept {
  SimpleElement s = *this;
  for (int j = 0; j < n_; ++j) {
    // (A X)[j] = X[A[j]] must equal n-1-j
    s.image_[image_[static_cast<std::size_t>(j)]] = static_cast<std::uint8_t>(n_ - 1 - j);
  }
  return s;
}

void SimpleElement::append_generator(int i0) noexcept {
  for (int j = 0; j < n_; ++j) {
    auto& v = image_[static_cast<std::size_t>(j)];
    if (v == i0) {
      v = static_cast<std::uint8_t>(i0 + 1);
    } else if (v == i0 + 1) {
      v = static_cast<std::uint8_t>(i0);
    }
  }
}

void SimpleElement::drop_leading_generator(int i0) noexcept {
  std::swap(image_[static_cast<std::size_t>(i0)], image_[static_cast<std::size_t>(i0 + 1)]);
}

BraidWord SimpleElement::word() const {
  std::vector<Letter> letters;
  SimpleElement s = *this;
  for (std::uint32_t m = s.starting_set(); m != 0; m = s.starting_set()) {
    const int i0 = std::countr_zero(m);
    letters.push_back(i0 + 1);
    s.drop_leading_generator(i0);
  }
  return BraidWord(n_, std::move(letters));
}

std::string NormalForm::key() const {
  std::string k(sizeof(long long), '\0');
  for (std::size_t b = 0; b < sizeof(long long); ++b) {
    k[b] = static_cast<char>((static_cast<unsigned long long>(delta_power) >> (8 * b)) & 0xff);
  }
  k.reserve(k.size() + factors.size() * static_cast<std::size_t>(strands));
  for (const auto& f : factors) {
    for (int j = 0; j < strands; ++j) {
      k.push_back(static_cast<char>(f.image(j)));
    }
  }
  return k;
}

bool make_left_weighted(SimpleElement& a, SimpleElement& b) noexcept {
  bool moved = false;
  for (;;) {
    const std::uint32_t m = b.starting_set() & ~a.finishing_set();
    if (m == 0) {
      return moved;
    }
    const int i0 = std::countr_zero(m);
    a.append_generator(i0);
    b.drop_leading_generator(i0);
    moved = true;
  }
}

bool is_left_weighted(const SimpleElement& a, const SimpleElement& b) noexcept {
  return (b.starting_set() & ~a.finishing_set()) == 0;
}

NormalForm left_normal_form(const BraidWord& w) {
  const int n = w.strands();
  check_garside_strands(n);
  const auto& letters = w.letters();
  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is pushed
  // to the front, applying tau to each simple factor it crosses.
  std::vector<int> negatives_after(letters.size() + 1, 0);
  for (std::size_t j = letters.size(); j > 0; --j) {
    negatives_after[j - 1] = negatives_after[j] + (letters[j - 1] < 0 ? 1 : 0);
  }
  NormalForm nf;
  nf.strands = n;
  nf.delta_power = -negatives_after[0];
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const Letter x = letters[j];
    SimpleElement s = x > 0 ? SimpleElement::generator(n, x)
                            : SimpleElement::delta_over_generator(n, -x);
    if (negatives_after[j + 1] & 1) {
      s = s.tau();
    }
    append_simple(nf.factors, s);
  }
  absorb_deltas(nf);
  return nf;
}

BraidWord to_word(const NormalForm& nf) {
  std::vector<Letter> letters;
  if (nf.delta_power != 0) {
    append_letters(letters, power(half_twist(nf.strands), nf.delta_power));
  }
  for (const auto& f : nf.factors) {
    append_letters(letters, f.word());
  }
  return BraidWord(nf.strands, std::move(letters));
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  if (a.strands != b.strands) {
    throw StrandMismatch(a.strands, b.strands);
  }
  // Delta^p A Delta^q B = Delta^{p+q} tau^q(A) B
  NormalForm out;
  out.strands = a.strands;
  out.delta_power = a.delta_power + b.delta_power;
  out.factors.reserve(a.factors.size() + b.factors.size());
  for (const auto& f : a.factors) {
    out.factors.push_back(f.tau_power(b.delta_power));
  }
  for (const auto& f : b.factors) {
    append_simple(out.factors, f);
  }
  absorb_deltas(out);
  return out;
}

NormalForm inverse(const NormalForm& x) {
  // A^{-1} = Delta^{-1} tau(right_complement(A)); collect the Delta^{-1}
  // factors on the left.
  NormalForm out;
  out.strands = x.strands;
  const auto k = static_cast<long long>(x.factors.size());
  out.delta_power = -x.delta_power - k;
  for (long long j = k - 1; j >= 0; --j) {
    // factor j is preceded (in the inverse) by k - 1 - j further Delta^{-1}
    // crossings from later factors plus the Delta^{-p} at the far right.
    const auto& f = x.factors[static_cast<std::size_t>(j)];
    const long long flips = 1 + j + x.delta_power;
    append_simple(out.factors, f.right_complement().tau_power(flips));
  }
  absorb_deltas(out);
  return out;
}

NormalForm power(const NormalForm& x, long long k) {
  if (k < 0) {
    return power(inverse(x), -k);
  }
  NormalForm result;
  result.strands = x.strands;
  NormalForm base = x;
  while (k > 0) {
    if (k & 1) {
      result = multiply(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

NormalForm conjugate_by_simple(const NormalForm& x, const SimpleElement& s) {
  NormalForm s_inv;
  s_inv.strands = x.strands;
  s_inv.delta_power = -1;
  const SimpleElement rest = s.right_complement().tau();
  if (!rest.is_identity()) {
    s_inv.factors.push_back(rest);
  }
  NormalForm s_nf;
  s_nf.strands = x.strands;
  if (s.is_delta()) {
    s_nf.delta_power = 1;
  } else if (!s.is_identity()) {
    s_nf.factors.push_back(s);
  }
  return multiply(multiply(s_inv, x), s_nf);
}

bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch(a.strands(), b.strands());
  }
  return left_normal_form(a) == left_normal_form(b);
}

std::pair<long long, long long> inf_sup(const BraidWord& w) {
  const auto nf = left_normal_form(w);
  return {nf.inf(), nf.sup()};
}

ConjugatedForm cycling(const NormalForm& x) {
  if (x.factors.empty()) {
    return {x, BraidWord(x.strands)};
  }
  // c(x) = a^{-1} x a with a = tau^p(A_1)
  const SimpleElement a = x.factors.front().tau_power(x.delta_power);
  NormalForm y;
  y.strands = x.strands;
  y.delta_power = x.delta_power;
  y.factors.assign(x.factors.begin() + 1, x.factors.end());
  append_simple(y.factors, a);
  absorb_deltas(y);
  return {std::move(y), a.word()};
}

ConjugatedForm decycling(const NormalForm& x) {
  if (x.factors.empty()) {
    return {x, BraidWord(x.strands)};
  }
  // d(x) = A_k x A_k^{-1} = Delta^p tau^p(A_k) A_1 ... A_{k-1}
  const SimpleElement& last = x.factors.back();
  NormalForm y;
  y.strands = x.strands;
  y.delta_power = x.delta_power;
  append_simple(y.factors, last.tau_power(x.delta_power));
  for (std::size_t j = 0; j + 1 < x.factors.size(); ++j) {
    append_simple(y.factors, x.factors[j]);
  }
  absorb_deltas(y);
  return {std::move(y), simple_inverse_word(last)};
}

ConjugatedForm super_summit_representative(const NormalForm& x) {
  const int n = x.strands;
  const int delta_length = n * (n - 1) / 2;
  NormalForm y = x;
  std::vector<Letter> conj;

  auto improve = [&](auto step, auto better) {
    bool improved = true;
    while (improved) {
      improved = false;
      NormalForm z = y;
      std::vector<Letter> trial = conj;
      for (int t = 0; t < delta_length && !z.factors.empty(); ++t) {
        auto next = step(z);
        z = std::move(next.element);
        append_letters(trial, next.conjugator);
        if (better(z, y)) {
          y = std::move(z);
          conj = std::move(trial);
          improved = true;
          break;
        }
      }
    }
  };
  improve([](const NormalForm& z) { return cycling(z); },
          [](const NormalForm& z, const NormalForm& cur) { return z.inf() > cur.inf(); });
  improve([](const NormalForm& z) { return decycling(z); },
          [](const NormalForm& z, const NormalForm& cur) { return z.sup() < cur.sup(); });
  return {std::move(y), free_reduce(BraidWord(n, std::move(conj)))};
}

namespace {

std::vector<SimpleElement> all_proper_simples(int n) {
  if (n > 8) {
    throw Error("summit orbit enumeration supports n <= 8");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SimpleElement> out;
  do {
    auto s = SimpleElement::from_images(perm);
    if (!s.is_identity()) {
      out.push_back(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Breadth-first closure of the summit set under simple conjugation. Each
// element maps to z with element = z^{-1} root z. Stops early once `target`
// is reached.
struct SummitOrbit {
  std::vector<NormalForm> elements;
  std::unordered_map<std::string, std::vector<Letter>> conjugators;
  bool found_target = false;
  std::string target_key;
};

SummitOrbit explore_summit(const NormalForm& root, std::size_t budget,
                           const std::string* target) {
  SummitOrbit orbit;
  const auto simples = all_proper_simples(root.strands);
  std::deque<std::size_t> queue;
  orbit.elements.push_back(root);
  orbit.conjugators.emplace(root.key(), std::vector<Letter>{});
  queue.push_back(0);
  if (target != nullptr && root.key() == *target) {
    orbit.found_target = true;
    return orbit;
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const NormalForm y = orbit.elements[idx];
    const std::vector<Letter> z = orbit.conjugators.at(y.key());
    for (const auto& s : simples) {
      NormalForm c = conjugate_by_simple(y, s);
      if (c.inf() != root.inf() || c.sup() != root.sup()) {
        continue;
      }
      auto key = c.key();
      if (orbit.conjugators.contains(key)) {
        continue;
      }
      std::vector<Letter> zc = z;
      append_letters(zc, s.word());
      orbit.conjugators.emplace(key, std::move(zc));
      orbit.elements.push_back(std::move(c));
      if (orbit.elements.size() > budget) {
        throw BudgetExceeded("super summit orbit exceeded budget of " +
                             std::to_string(budget) + " elements");
      }
      if (target != nullptr && key == *target) {
        orbit.found_target = true;
        return orbit;
      }
      queue.push_back(orbit.elements.size() - 1);
    }
  }
  return orbit;
}

}  // namespace

std::vector<NormalForm> super_summit_set(const NormalForm& x, std::size_t budget) {
  const auto rep = super_summit_representative(x);
  return explore_summit(rep.element, budget, nullptr).elements;
}

ConjugacyCertificate are_conjugate(const BraidWord& a, const BraidWord& b,
                                   std::size_t budget) {
  if (a.strands() != b.strands()) {
    throw StrandMismatch(a.strands(), b.strands());
  }
  ConjugacyCertificate cert;
  if (exponent_sum(a) != exponent_sum(b) ||
      permutation(a).cycle_type() != permutation(b).cycle_type()) {
    return cert;
  }
  const auto ra = super_summit_representative(left_normal_form(a));
  const auto rb = super_summit_representative(left_normal_form(b));
  if (ra.element.inf() != rb.element.inf() || ra.element.sup() != rb.element.sup()) {
    return cert;
  }
  const std::string target = rb.element.key();
  const auto orbit = explore_summit(ra.element, budget, &target);
  cert.orbit_size = orbit.elements.size();
  if (!orbit.found_target) {
    return cert;
  }
  // rb = z^{-1} ra z, ra = ua^{-1} a ua, rb = ub^{-1} b ub  =>  c = ub z^{-1} ua^{-1}
  const BraidWord z(a.strands(), orbit.conjugators.at(target));
  cert.conjugate = true;
  cert.witness = compose(compose(rb.conjugator, inverse(z)), inverse(ra.conjugator));
  return cert;
}

}  // namespace braidwalk::garside
