#pragma once

// Fractional Dehn twist coefficient of a braid, realized as the translation
// number of the Dehornoy floor: FDTC(w) = lim floor(w^k) / k.
//
// Every estimate is an interval certified under a defect bound D for the
// floor: |floor(w^k) - k FDTC(w)| <= D.

#include <optional>
#include <utility>
#include <vector>

#include "braidwalk/braid.hpp"
#include "braidwalk/rational.hpp"

namespace braidwalk {

inline const Rational kDefaultDefectBound{2};

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool intersects(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

struct FdtcEstimate {
  RationalInterval interval;
  std::optional<Rational> exact;
  long long power_used = 0;
  Rational defect_bound;

  // exact when recovered, otherwise the interval midpoint
  Rational value() const { return exact ? *exact : interval.midpoint(); }
};

struct FloorSample {
  long long power = 0;
  long long floor = 0;
};

// Floors of w^k for k = 1, 2, 4, ... <= k_max.
std::vector<FloorSample> floor_growth(const BraidWord& w, long long k_max);

// [floor(w^k)/k - D/k, floor(w^k)/k + D/k]
RationalInterval fdtc_bounds(const BraidWord& w, long long k, const Rational& defect);

// Doubles k until the interval holds exactly one rational of denominator
// <= q_max, which is then reported as exact. If k_max runs out first, exact
// is absent and the last interval is returned.
FdtcEstimate fdtc_exact(const BraidWord& w, long long q_max, long long k_max,
                        const Rational& defect = kDefaultDefectBound);

// max(0, |v|) for v the exact value, or the interval endpoint nearest zero
// (0 when the interval straddles zero).
Rational genus_lower_bound_from_fdtc(const BraidWord& w, const FdtcEstimate& est);

// Rational of least denominator in [lo, hi] (Stern-Brocot descent); among
// integers, the one closest to zero.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

// The rational of denominator <= q_max in the interval, if it is the only one.
std::optional<Rational> unique_bounded_rational(const RationalInterval& interval,
                                                long long q_max);

}  // namespace braidwalk
