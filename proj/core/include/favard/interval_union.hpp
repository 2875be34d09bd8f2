#pragma once

#include "favard/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace favard {

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, disjoint closed intervals with exact endpoints. Touching
/// intervals are merged, so the representation is canonical.
class IntervalUnion {
public:
  IntervalUnion() = default;

  static IntervalUnion from_intervals(std::vector<Interval> intervals);

  /// Union of [s, s + width] / denominator over all starts. Starts need
  /// not be sorted or distinct.
  static IntervalUnion from_lattice(std::vector<BigInt> starts, const BigInt& width,
                                    const BigInt& denominator);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  const Rational& measure() const noexcept { return measure_; }
  bool contains(const Rational& x) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
  std::vector<Interval> intervals_;
  Rational measure_;
};

/// Total length of the union of [s, s + width] in integer units; starts
/// must be sorted ascending.
BigInt lattice_union_length(std::span<const BigInt> sorted_starts, const BigInt& width);

/// Float counterpart: starts within `tolerance` of the running right end
/// are treated as touching. Sorts `starts` in place.
double float_union_length(std::vector<double>& starts, double width, double tolerance = 1e-12);

}  // namespace favard
