#pragma once

// Invariants of braid closures, computed from the Seifert surface that
// Seifert's algorithm produces on the closed-braid diagram: one disk per
// strand, one half-twisted band per letter.

#include <optional>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/exact_linalg.hpp"
#include "braidwalk/laurent.hpp"
#include "braidwalk/rational.hpp"

namespace braidwalk {

// Alternating knots satisfy s = kAlternatingConvention * signature under the
// sign choices used here (positive trefoil: signature -2, s = +2). Pass +1 to
// the certificate to use the opposite reading.
inline constexpr int kAlternatingConvention = -1;

struct SeifertData {
  // Size l - n + 1 for the freely reduced word of length l. Generators are the
  // loops through consecutive bands of one column, ordered by first band.
  linalg::IntMatrix matrix;
  int components = 0;
};

// Throws SplitDiagram when some generator index is absent.
SeifertData seifert_matrix(const BraidWord& w);

// Maximal runs of present generator indices, each as a braid on its own
// strands (renumbered from 1), read off the freely reduced word. Empty for
// the empty word.
std::vector<BraidWord> index_blocks(const BraidWord& w);
bool is_split_diagram(const BraidWord& w);

// Signature of V + V^T; additive over index blocks.
int signature(const BraidWord& w);

// det(V - tV^T), normalized (LaurentPolynomial::normalized); zero for split
// diagrams.
LaurentPolynomial alexander_polynomial(const BraidWord& w);

// (2 - components - (n - l)) / 2. Throws SplitDiagram.
long long diagram_genus_upper_bound(const BraidWord& w);
// Sum of the per-block bounds; equals the above on connected diagrams.
long long split_genus_upper_bound(const BraidWord& w);

struct SInterval {
  long long lo = 0;
  long long hi = 0;

  friend bool operator==(const SInterval&, const SInterval&) = default;
};

// Slice-Bennequin window [e - n + 1, e + n - 1], collapsed to e - n + 1 on
// positive words. Throws UndefinedInvariant unless the closure is a knot.
SInterval s_interval(const BraidWord& w);

struct InvariantReport {
  int strands = 0;
  long long e = 0;
  int components = 0;
  int signature = 0;
  LaurentPolynomial alexander;
  std::optional<SInterval> s;  // knots only
  bool split = false;
  long long diagram_genus_bound = 0;  // split_genus_upper_bound
  Rational g4_lower;
  std::optional<Rational> fdtc_genus_bound;
};

// With include_alexander false the (costlier) Alexander polynomial is left
// as zero.
InvariantReport invariant_report(const BraidWord& w,
                                 std::optional<Rational> fdtc_genus_bound = std::nullopt,
                                 bool include_alexander = true);

// Knots: max(|sigma|, max(0, s_lo), max(0, -s_hi)) / 2.
// Links: max(0, |sigma| - components + 1) / 2.
Rational g4_lower_bound(const InvariantReport& report);

// True when no s in the s-interval equals convention * sigma. Sound, not
// complete; false for links.
bool nonalternating_certificate(const InvariantReport& report,
                                int convention = kAlternatingConvention);

}  // namespace braidwalk
