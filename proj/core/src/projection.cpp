#include "favard/projection.hpp"

#include "favard/error.hpp"
#include "favard/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace favard {

Slope Slope::rational(std::int64_t q, std::int64_t r) {
  if (q < 0 || r < 1) throw DomainError("slope q/r needs q >= 0 and r >= 1");
  const auto g = std::gcd(q, r);
  Slope s;
  s.q_ = q / g;
  s.r_ = r / g;
  s.value_ = static_cast<double>(s.q_) / static_cast<double>(s.r_);
  return s;
}

Slope Slope::real(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("slope must be finite and nonnegative");
  Slope s;
  s.rational_ = false;
  s.value_ = t;
  return s;
}

Slope Slope::parse(const std::string& text) {
  Rational v = parse_rational(text);
  if (v < 0) throw DomainError("slope must be nonnegative, got " + text);
  const BigInt& num = numerator(v);
  const BigInt& den = denominator(v);
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  if (num > limit || den > limit) throw DomainError("slope " + text + " does not fit in 64 bits");
  return rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
}

std::int64_t Slope::q() const {
  if (!rational_) throw DomainError("real slope has no exact numerator");
  return q_;
}

std::int64_t Slope::r() const {
  if (!rational_) throw DomainError("real slope has no exact denominator");
  return r_;
}

Rational Slope::exact() const { return Rational(BigInt(q()), BigInt(r())); }

double Slope::cos_theta() const {
  if (rational_)
    return static_cast<double>(r_) / std::hypot(static_cast<double>(q_), static_cast<double>(r_));
  return 1.0 / std::hypot(1.0, value_);
}

double Slope::sin_theta() const {
  if (rational_)
    return static_cast<double>(q_) / std::hypot(static_cast<double>(q_), static_cast<double>(r_));
  return value_ / std::hypot(1.0, value_);
}

std::string Slope::str() const {
  if (rational_) return std::to_string(q_) + "/" + std::to_string(r_);
  return std::to_string(value_);
}

namespace {

std::vector<BigInt> combine(const LevelSet& a, const LevelSet& b, std::int64_t ra, std::int64_t qb) {
  std::vector<BigInt> out;
  out.reserve(a.elements.size() * b.elements.size());
  for (const auto& x : a.elements) {
    BigInt base = x * ra;
    for (const auto& y : b.elements) out.push_back(base + y * qb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_total(const DigitSystem& ds, int n, const Limits& limits) {
  checked_count(static_cast<std::size_t>(ds.base()), n, limits);
}

}  // namespace

ProjectedPoints projected_points(const DigitSystem& ds, int n, const Slope& slope,
                                 const Limits& limits) {
  check_total(ds, n, limits);
  auto a = level_set(ds, n, Side::a, limits);
  auto b = level_set(ds, n, Side::b, limits);
  ProjectedPoints out;
  out.points = combine(a, b, slope.r(), slope.q());
  out.denominator = a.denominator() * slope.r();
  return out;
}

ProjectionMeasure projection_measure(const DigitSystem& ds, int n, const Slope& slope,
                                     const Limits& limits) {
  auto pts = projected_points(ds, n, slope, limits);
  ProjectionMeasure out;
  out.support = IntervalUnion::from_lattice(std::move(pts.points), BigInt(slope.r() + slope.q()),
                                            pts.denominator);
  out.rational_part = out.support.measure();
  out.cos_theta = slope.cos_theta();
  out.measure = to_double(out.rational_part) * out.cos_theta;
  return out;
}

BigInt projection_length_units(const DigitSystem& ds, int n, std::int64_t q, std::int64_t r,
                               const Limits& limits) {
  if (q < 0 || r < 0 || (q == 0 && r == 0)) throw DomainError("direction needs q, r >= 0, not both 0");
  check_total(ds, n, limits);
  auto pts = combine(level_set(ds, n, Side::a, limits), level_set(ds, n, Side::b, limits), r, q);
  return lattice_union_length(pts, BigInt(q + r));
}

ProjectionEvaluator::ProjectionEvaluator(const DigitSystem& ds, int n, const Limits& limits)
    : level_(n), side_(std::pow(static_cast<double>(ds.base()), -n)) {
  check_total(ds, n, limits);
  a_ = level_values(ds, n, Side::a, limits);
  b_ = level_values(ds, n, Side::b, limits);
}

double ProjectionEvaluator::length(double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<double> starts;
  starts.reserve(a_.size() * b_.size());
  for (double x : a_)
    for (double y : b_) starts.push_back(x * c + y * s);
  return float_union_length(starts, side_ * (c + s));
}

StepFunction counting_function_from_atoms(std::span<const BigInt> atoms, const BigInt& width,
                                          const BigInt& denominator) {
  return StepFunction::from_windows(atoms, width, denominator);
}

StepFunction counting_function(const DigitSystem& ds, int n, const Slope& slope, Window window,
                               const Limits& limits) {
  auto pts = projected_points(ds, n, slope, limits);
  const BigInt width = window == Window::unit ? BigInt(slope.r()) : BigInt(slope.r() + slope.q());
  return counting_function_from_atoms(pts.points, width, pts.denominator);
}

Rational l2_norm_sq(const DigitSystem& ds, int n, const Slope& slope, Window window,
                    const Limits& limits) {
  return counting_function(ds, n, slope, window, limits).l2_norm_sq();
}

XLambdaResult x_lambda_member(const DigitSystem& ds, int big_n, const Slope& slope,
                              const Rational& lambda, Window window, const Limits& limits) {
  if (big_n < 1) throw DomainError("X_lambda^N needs N >= 1");
  XLambdaResult out;
  out.slope = slope;
  for (int n = 1; n <= big_n; ++n) {
    out.norms.push_back(l2_norm_sq(ds, n, slope, window, limits));
    if (n == 1 || out.norms.back() > out.max_norm) {
      out.max_norm = out.norms.back();
      out.witness_level = n;
    }
  }
  out.member = out.max_norm <= lambda;
  return out;
}

XLambdaEstimate x_lambda_measure_estimate(const DigitSystem& ds, int big_n, const Rational& lambda,
                                          const std::vector<Slope>& grid, Window window,
                                          const Limits& limits) {
  if (grid.empty()) throw DomainError("slope grid is empty");
  XLambdaEstimate out;
  out.samples = parallel_map(grid.size(), [&](std::size_t i) {
    return x_lambda_member(ds, big_n, grid[i], lambda, window, limits);
  });
  auto members = std::count_if(out.samples.begin(), out.samples.end(),
                               [](const XLambdaResult& r) { return r.member; });
  out.fraction = static_cast<double>(members) / static_cast<double>(grid.size());
  return out;
}

std::vector<Slope> farey_sequence(int order) {
  if (order < 1) throw DomainError("Farey order must be at least 1");
  // Standard next-term recurrence.
  std::vector<Slope> out{Slope::rational(0, 1)};
  std::int64_t a = 0, b = 1, c = 1, d = order;
  while (c <= order) {
    const std::int64_t k = (order + b) / d;
    const std::int64_t next_c = k * c - a, next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    out.push_back(Slope::rational(a, b));
  }
  return out;
}

}  // namespace favard
