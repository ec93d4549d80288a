#include "braidwalk/fdtc.hpp"

#include "braidwalk/dehornoy.hpp"
#include "braidwalk/error.hpp"
#include "braidwalk/garside.hpp"

namespace braidwalk {

namespace {

RationalInterval interval_from_floor(long long floor_value, long long k, const Rational& defect) {
  const Rational center = ratio(floor_value, k);
  const Rational radius = defect / ratio(k);
  Rational lo = center - radius;
  Rational hi = center + radius;
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

void check_power(long long k) {
  if (k < 1) {
    throw Error("power must be >= 1");
  }
}

BigInt ceil(const Rational& v) { return -floor(Rational(-v)); }

}  // namespace

std::vector<FloorSample> floor_growth(const BraidWord& w, long long k_max) {
  check_power(k_max);
  std::vector<FloorSample> out;
  auto nf = garside::left_normal_form(w);
  for (long long k = 1; k <= k_max; k *= 2) {
    out.push_back({k, dehornoy::dehornoy_floor(nf).floor});
    if (k > k_max / 2) {
      break;
    }
    nf = garside::multiply(nf, nf);
  }
  return out;
}

RationalInterval fdtc_bounds(const BraidWord& w, long long k, const Rational& defect) {
  check_power(k);
  const auto nf = garside::power(garside::left_normal_form(w), k);
  return interval_from_floor(dehornoy::dehornoy_floor(nf).floor, k, defect);
}

FdtcEstimate fdtc_exact(const BraidWord& w, long long q_max, long long k_max,
                        const Rational& defect) {
  if (q_max < 1) {
    throw Error("q_max must be >= 1");
  }
  if (defect < 0) {
    throw Error("defect bound must be non-negative");
  }
  FdtcEstimate est;
  est.defect_bound = defect;
  for (const auto& sample : floor_growth(w, k_max)) {
    est.interval = interval_from_floor(sample.floor, sample.power, defect);
    est.power_used = sample.power;
    if (auto q = unique_bounded_rational(est.interval, q_max)) {
      est.exact = *q;
      return est;
    }
  }
  return est;
}

Rational genus_lower_bound_from_fdtc(const BraidWord&, const FdtcEstimate& est) {
  if (est.exact) {
    return abs(*est.exact);
  }
  const auto& iv = est.interval;
  if (iv.lo <= 0 && 0 <= iv.hi) {
    return Rational(0);
  }
  return iv.lo > 0 ? iv.lo : Rational(-iv.hi);
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) {
    throw Error("empty interval");
  }
  if (lo <= 0 && 0 <= hi) {
    return Rational(0);
  }
  if (hi < 0) {
    return Rational(-simplest_rational_in(Rational(-hi), Rational(-lo)));
  }
  // 0 < lo <= hi
  const BigInt fl = ceil(lo);
  if (Rational(fl) <= hi) {
    return Rational(fl);
  }
  const BigInt whole = floor(lo);
  // lo, hi in (whole, whole + 1): recurse on the reciprocal of the fractional parts
  const Rational inner = simplest_rational_in(Rational(1) / (hi - Rational(whole)),
                                              Rational(1) / (lo - Rational(whole)));
  Rational out = Rational(whole) + Rational(1) / inner;
  out.canonicalize();
  return out;
}

std::optional<Rational> unique_bounded_rational(const RationalInterval& interval,
                                                long long q_max) {
  const Rational candidate = simplest_rational_in(interval.lo, interval.hi);
  if (candidate.get_den() > to_big(q_max)) {
    return std::nullopt;
  }
  // Any second fraction p/q (q <= q_max) in the interval disqualifies.
  for (long long q = 1; q <= q_max; ++q) {
    const BigInt first = ceil(interval.lo * ratio(q));
    const BigInt last = floor(interval.hi * ratio(q));
    for (BigInt p = first; p <= last; ++p) {
      Rational f(p, to_big(q));
      f.canonicalize();
      if (f != candidate) {
        return std::nullopt;
      }
    }
  }
  return candidate;
}

}  // namespace braidwalk
