#include "braidwalk/link_invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidwalk/error.hpp"

namespace braidwalk {

namespace {

struct Loop {
  int column = 0;  // generator index
  int first = 0;   // band positions in the word, first < second
  int second = 0;
};

std::vector<bool> present_indices(const BraidWord& w) {
  std::vector<bool> present(static_cast<std::size_t>(w.strands()), false);
  for (Letter x : w.letters()) {
    present[static_cast<std::size_t>(std::abs(x))] = true;
  }
  return present;
}

}  // namespace

bool is_split_diagram(const BraidWord& w) {
  const auto present = present_indices(free_reduce(w));
  return std::find(present.begin() + 1, present.end(), false) != present.end();
}

std::vector<BraidWord> index_blocks(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  const auto present = present_indices(w);
  const int n = w.strands();
  std::vector<BraidWord> out;
  int i = 1;
  while (i < n) {
    if (!present[static_cast<std::size_t>(i)]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && present[static_cast<std::size_t>(j + 1)]) {
      ++j;
    }
    std::vector<Letter> letters;
    for (Letter x : w.letters()) {
      const int a = std::abs(x);
      if (a >= i && a <= j) {
        letters.push_back((x > 0 ? 1 : -1) * (a - i + 1));
      }
    }
    out.emplace_back(j - i + 2, std::move(letters));
    i = j + 1;
  }
  return out;
}

SeifertData seifert_matrix(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (is_split_diagram(w)) {
    throw SplitDiagram("generator index absent: closure diagram is split");
  }
  const auto& x = w.letters();
  const int n = w.strands();

  std::vector<std::vector<int>> bands(static_cast<std::size_t>(n));
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    bands[static_cast<std::size_t>(std::abs(x[pos]))].push_back(static_cast<int>(pos));
  }
  std::vector<Loop> loops;
  for (int col = 1; col < n; ++col) {
    const auto& b = bands[static_cast<std::size_t>(col)];
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      loops.push_back({col, b[j], b[j + 1]});
    }
  }
  std::sort(loops.begin(), loops.end(),
            [](const Loop& l, const Loop& r) { return l.first < r.first; });

  // Loop ids per column in band order.
  std::vector<std::vector<int>> by_column(static_cast<std::size_t>(n));
  for (std::size_t id = 0; id < loops.size(); ++id) {
    by_column[static_cast<std::size_t>(loops[id].column)].push_back(static_cast<int>(id));
  }
  auto sign_at = [&](int pos) { return x[static_cast<std::size_t>(pos)] > 0 ? 1 : -1; };

  SeifertData out;
  out.components = closure_component_count(w);
  out.matrix = linalg::IntMatrix(static_cast<int>(loops.size()));
  auto& v = out.matrix;
  for (int col = 1; col < n; ++col) {
    const auto& ids = by_column[static_cast<std::size_t>(col)];
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const Loop& l = loops[static_cast<std::size_t>(ids[j])];
      v.at(ids[j], ids[j]) = -(sign_at(l.first) + sign_at(l.second)) / 2;
      if (j + 1 < ids.size()) {
        const int shared = sign_at(l.second);
        v.at(ids[j], ids[j + 1]) = (1 + shared) / 2;
        v.at(ids[j + 1], ids[j]) = (shared - 1) / 2;
      }
    }
    if (col + 1 >= n) {
      continue;
    }
    for (int left : ids) {
      const Loop& l = loops[static_cast<std::size_t>(left)];
      for (int right : by_column[static_cast<std::size_t>(col + 1)]) {
        const Loop& r = loops[static_cast<std::size_t>(right)];
        if (r.first > l.second) {
          break;
        }
        if (l.first < r.first && r.first < l.second && l.second < r.second) {
          v.at(left, right) = -1;
        } else if (r.first < l.first && l.first < r.second && r.second < l.second) {
          v.at(left, right) = 1;
        }
      }
    }
  }
  return out;
}

int signature(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (is_split_diagram(w)) {
    int total = 0;
    for (const auto& block : index_blocks(w)) {
      total += signature(block);
    }
    return total;
  }
  const auto data = seifert_matrix(w);
  return linalg::symmetric_signature(data.matrix + data.matrix.transpose());
}

LaurentPolynomial alexander_polynomial(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (is_split_diagram(w)) {
    return {};
  }
  return linalg::alexander_determinant(seifert_matrix(w).matrix).normalized();
}

long long diagram_genus_upper_bound(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (is_split_diagram(w)) {
    throw SplitDiagram("genus bound needs a connected diagram");
  }
  const long long chi = w.strands() - static_cast<long long>(w.size());
  return (2 - closure_component_count(w) - chi) / 2;
}

long long split_genus_upper_bound(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (!is_split_diagram(w)) {
    return diagram_genus_upper_bound(w);
  }
  long long total = 0;
  for (const auto& block : index_blocks(w)) {
    total += diagram_genus_upper_bound(block);
  }
  return total;
}

SInterval s_interval(const BraidWord& input) {
  const BraidWord w = free_reduce(input);
  if (closure_component_count(w) != 1) {
    throw UndefinedInvariant("s is only defined here for knot closures");
  }
  const long long e = exponent_sum(w);
  const long long n = w.strands();
  if (is_positive(w)) {
    return {e - n + 1, e - n + 1};
  }
  return {e - n + 1, e + n - 1};
}

InvariantReport invariant_report(const BraidWord& input, std::optional<Rational> fdtc_genus_bound,
                                 bool include_alexander) {
  const BraidWord w = free_reduce(input);
  InvariantReport r;
  r.strands = w.strands();
  r.e = exponent_sum(w);
  r.components = closure_component_count(w);
  r.signature = signature(w);
  if (include_alexander) {
    r.alexander = alexander_polynomial(w);
  }
  if (r.components == 1) {
    r.s = s_interval(w);
  }
  r.split = is_split_diagram(w);
  r.diagram_genus_bound = split_genus_upper_bound(w);
  r.fdtc_genus_bound = std::move(fdtc_genus_bound);
  r.g4_lower = g4_lower_bound(r);
  return r;
}

Rational g4_lower_bound(const InvariantReport& report) {
  const long long sig = std::abs(report.signature);
  long long twice;
  if (report.s) {
    twice = std::max({sig, std::max(0LL, report.s->lo), std::max(0LL, -report.s->hi)});
  } else {
    twice = std::max(0LL, sig - report.components + 1);
  }
  Rational out(static_cast<long>(twice), 2L);
  out.canonicalize();
  return out;
}

bool nonalternating_certificate(const InvariantReport& report, int convention) {
  if (!report.s) {
    return false;
  }
  const long long target = static_cast<long long>(convention) * report.signature;
  return target < report.s->lo || target > report.s->hi;
}

}  // namespace braidwalk
