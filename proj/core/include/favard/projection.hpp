#pragma once

#include "favard/digit_system.hpp"
#include "favard/interval_union.hpp"
#include "favard/level_set.hpp"
#include "favard/step_function.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace favard {

/// t = tan(theta) >= 0, either an exact reduced fraction q/r or a float.
class Slope {
public:
  static Slope rational(std::int64_t q, std::int64_t r);
  static Slope real(double t);
  /// "q/r", "q", or a decimal; decimals become exact fractions.
  static Slope parse(const std::string& text);

  bool is_rational() const noexcept { return rational_; }
  std::int64_t q() const;
  std::int64_t r() const;
  Rational exact() const;
  double value() const noexcept { return value_; }
  double cos_theta() const;
  double sin_theta() const;
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

private:
  bool rational_ = true;
  std::int64_t q_ = 0;
  std::int64_t r_ = 1;
  double value_ = 0.0;
};

/// Multiset {r a + q b}, true positions element / (r K^n), ascending.
struct ProjectedPoints {
  std::vector<BigInt> points;
  BigInt denominator;
};

struct ProjectionMeasure {
  Rational rational_part;  // length of the union along the line parameter x + t y
  double cos_theta = 1.0;
  double measure = 0.0;    // rational_part * cos(theta)
  IntervalUnion support;
};

enum class Window {
  unit,     // phi_n: width K^-n, height K^n
  squares,  // width (1 + t) K^-n; counts squares over each point
};

ProjectedPoints projected_points(const DigitSystem& ds, int n, const Slope& slope,
                                 const Limits& limits = {});

/// Exact |pi_theta(E_n)| for a rational slope.
ProjectionMeasure projection_measure(const DigitSystem& ds, int n, const Slope& slope,
                                     const Limits& limits = {});

/// |pi_theta(E_n)| along the direction (r, q), q, r >= 0 not both zero, as
/// an integer count of units 1 / (K^n sqrt(q^2 + r^2)). Handles vertical
/// projection (r = 0), which Slope cannot express.
BigInt projection_length_units(const DigitSystem& ds, int n, std::int64_t q, std::int64_t r,
                               const Limits& limits = {});

/// Float path for an arbitrary angle theta in [0, pi/2]; reuses the level
/// sets across calls.
class ProjectionEvaluator {
public:
  ProjectionEvaluator(const DigitSystem& ds, int n, const Limits& limits = {});
  double length(double theta) const;
  int level() const noexcept { return level_; }

private:
  int level_;
  double side_;
  std::vector<double> a_;
  std::vector<double> b_;
};

/// Counting function nu^n[t] * window. Values are integer counts: each of the
/// K^n atoms carries weight K^-n and the window has height K^n.
StepFunction counting_function(const DigitSystem& ds, int n, const Slope& slope,
                               Window window = Window::unit, const Limits& limits = {});

/// Same construction from an explicit multiset of atoms in units 1/denominator.
StepFunction counting_function_from_atoms(std::span<const BigInt> atoms, const BigInt& width,
                                          const BigInt& denominator);

Rational l2_norm_sq(const DigitSystem& ds, int n, const Slope& slope, Window window = Window::unit,
                    const Limits& limits = {});

struct XLambdaResult {
  Slope slope;
  bool member = false;
  int witness_level = 0;  // level attaining the maximum
  Rational max_norm;
  std::vector<Rational> norms;  // levels 1..N
};

/// t is in X_lambda^N iff max over 1 <= n <= N of the squared L2 norm of the
/// counting function is at most lambda.
XLambdaResult x_lambda_member(const DigitSystem& ds, int big_n, const Slope& slope,
                              const Rational& lambda, Window window = Window::unit,
                              const Limits& limits = {});

struct XLambdaEstimate {
  double fraction = 0.0;
  std::vector<XLambdaResult> samples;
};

XLambdaEstimate x_lambda_measure_estimate(const DigitSystem& ds, int big_n, const Rational& lambda,
                                          const std::vector<Slope>& grid,
                                          Window window = Window::unit, const Limits& limits = {});

/// Farey fractions of the given order in [0, 1], ascending.
std::vector<Slope> farey_sequence(int order);

}  // namespace favard
