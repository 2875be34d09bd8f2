#pragma once

#include "favard/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace favard {

/// Piecewise-constant function scale * v_i on (x_{i-1}, x_i), zero outside
/// [x_0, x_k]. Kept canonical: no repeated adjacent values, no zero pieces
/// at either end.
class StepFunction {
public:
  StepFunction() = default;
  StepFunction(std::vector<Rational> breakpoints, std::vector<std::int64_t> values,
               Rational scale = 1);

  /// Sum of windows [s, s + width] / denominator, each of height 1.
  static StepFunction from_windows(std::span<const BigInt> starts, const BigInt& width,
                                   const BigInt& denominator);

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  const Rational& scale() const noexcept { return scale_; }

  /// Value on the piece containing x (right-continuous at breakpoints).
  Rational operator()(const Rational& x) const;
  Rational integral() const;
  Rational l2_norm_sq() const;
  std::int64_t max_value() const;

  StepFunction shifted(const Rational& offset) const;

  /// Both operands must share the same scale.
  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<std::int64_t> values_;
  Rational scale_ = 1;
};

}  // namespace favard
