#include "favard/interval_union.hpp"

#include "favard/error.hpp"

#include <algorithm>

namespace favard {

IntervalUnion IntervalUnion::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals)
    if (iv.hi < iv.lo) throw DomainError("interval with hi < lo");
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalUnion out;
  for (auto& iv : intervals) {
    if (iv.hi == iv.lo) continue;
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      if (iv.hi > out.intervals_.back().hi) out.intervals_.back().hi = iv.hi;
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  for (const auto& iv : out.intervals_) out.measure_ += iv.hi - iv.lo;
  return out;
}

IntervalUnion IntervalUnion::from_lattice(std::vector<BigInt> starts, const BigInt& width,
                                          const BigInt& denominator) {
  if (width <= 0) throw DomainError("lattice interval width must be positive");
  if (denominator <= 0) throw DomainError("denominator must be positive");
  std::sort(starts.begin(), starts.end());
  std::vector<std::pair<BigInt, BigInt>> merged;
  for (const auto& s : starts) {
    BigInt e = s + width;
    if (!merged.empty() && s <= merged.back().second) {
      if (e > merged.back().second) merged.back().second = e;
    } else {
      merged.emplace_back(s, e);
    }
  }
  IntervalUnion out;
  BigInt total = 0;
  out.intervals_.reserve(merged.size());
  for (auto& [lo, hi] : merged) {
    total += hi - lo;
    out.intervals_.push_back({Rational(lo, denominator), Rational(hi, denominator)});
  }
  out.measure_ = Rational(total, denominator);
  return out;
}

bool IntervalUnion::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x <= it->hi;
}

BigInt lattice_union_length(std::span<const BigInt> sorted_starts, const BigInt& width) {
  BigInt total = 0;
  if (sorted_starts.empty()) return total;
  BigInt lo = sorted_starts.front();
  BigInt hi = lo + width;
  for (const auto& s : sorted_starts.subspan(1)) {
    if (s <= hi) {
      BigInt e = s + width;
      if (e > hi) hi = std::move(e);
    } else {
      total += hi - lo;
      lo = s;
      hi = s + width;
    }
  }
  return total + (hi - lo);
}

double float_union_length(std::vector<double>& starts, double width, double tolerance) {
  if (starts.empty()) return 0.0;
  std::sort(starts.begin(), starts.end());
  double total = 0.0;
  double lo = starts.front();
  double hi = lo + width;
  for (std::size_t i = 1; i < starts.size(); ++i) {
    const double s = starts[i];
    if (s <= hi + tolerance) {
      hi = std::max(hi, s + width);
    } else {
      total += hi - lo;
      lo = s;
      hi = s + width;
    }
  }
  return total + (hi - lo);
}

}  // namespace favard
