#include "favard/step_function.hpp"

#include "favard/error.hpp"

#include <algorithm>

namespace favard {

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<std::int64_t> values,
                           Rational scale)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)), scale_(std::move(scale)) {
  if (breakpoints_.empty() ? !values_.empty() : values_.size() + 1 != breakpoints_.size())
    throw DomainError("step function needs one more breakpoint than values");
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
      std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end())
    throw DomainError("step function breakpoints must be strictly increasing");
  if (std::any_of(values_.begin(), values_.end(), [](auto v) { return v < 0; }))
    throw DomainError("step function values must be nonnegative");
  if (scale_ <= 0) throw DomainError("step function scale must be positive");
  canonicalize();
}

void StepFunction::canonicalize() {
  if (values_.empty()) {
    breakpoints_.clear();
    return;
  }
  std::vector<Rational> bp{breakpoints_.front()};
  std::vector<std::int64_t> vals;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!vals.empty() && vals.back() == values_[i]) {
      bp.back() = breakpoints_[i + 1];
    } else {
      vals.push_back(values_[i]);
      bp.push_back(breakpoints_[i + 1]);
    }
  }
  std::size_t first = 0;
  while (first < vals.size() && vals[first] == 0) ++first;
  std::size_t last = vals.size();
  while (last > first && vals[last - 1] == 0) --last;
  if (first == last) {
    breakpoints_.clear();
    values_.clear();
    return;
  }
  breakpoints_.assign(bp.begin() + static_cast<std::ptrdiff_t>(first),
                      bp.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  values_.assign(vals.begin() + static_cast<std::ptrdiff_t>(first),
                 vals.begin() + static_cast<std::ptrdiff_t>(last));
}

StepFunction StepFunction::from_windows(std::span<const BigInt> starts, const BigInt& width,
                                        const BigInt& denominator) {
  if (width <= 0) throw DomainError("window width must be positive");
  std::vector<BigInt> lo(starts.begin(), starts.end());
  std::sort(lo.begin(), lo.end());
  std::vector<BigInt> hi;
  hi.reserve(lo.size());
  for (const auto& s : lo) hi.push_back(s + width);

  // Merge the sorted opening and closing coordinates into a running count.
  std::vector<BigInt> coords;
  std::vector<std::int64_t> counts;
  std::int64_t running = 0;
  std::size_t i = 0, j = 0;
  while (i < lo.size() || j < hi.size()) {
    const BigInt& x = (j == hi.size() || (i < lo.size() && lo[i] < hi[j])) ? lo[i] : hi[j];
    BigInt at = x;
    while (i < lo.size() && lo[i] == at) ++running, ++i;
    while (j < hi.size() && hi[j] == at) --running, ++j;
    coords.push_back(std::move(at));
    counts.push_back(running);
  }
  StepFunction f;
  if (coords.empty()) return f;
  f.breakpoints_.reserve(coords.size());
  for (const auto& c : coords) f.breakpoints_.emplace_back(c, denominator);
  counts.pop_back();
  f.values_ = std::move(counts);
  f.canonicalize();
  return f;
}

Rational StepFunction::operator()(const Rational& x) const {
  if (breakpoints_.empty() || x < breakpoints_.front() || x >= breakpoints_.back()) return 0;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return scale_ * values_[idx];
}

Rational StepFunction::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    total += (breakpoints_[i + 1] - breakpoints_[i]) * values_[i];
  return scale_ * total;
}

Rational StepFunction::l2_norm_sq() const {
  Rational total = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    total += (breakpoints_[i + 1] - breakpoints_[i]) * (values_[i] * values_[i]);
  return scale_ * scale_ * total;
}

std::int64_t StepFunction::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

StepFunction StepFunction::shifted(const Rational& offset) const {
  StepFunction out = *this;
  for (auto& b : out.breakpoints_) b += offset;
  return out;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  if (f.values_.empty()) return g;
  if (g.values_.empty()) return f;
  if (f.scale_ != g.scale_) throw DomainError("cannot add step functions with different scales");
  std::vector<Rational> bp;
  bp.reserve(f.breakpoints_.size() + g.breakpoints_.size());
  std::merge(f.breakpoints_.begin(), f.breakpoints_.end(), g.breakpoints_.begin(),
             g.breakpoints_.end(), std::back_inserter(bp));
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  auto piece_value = [](const StepFunction& h, std::size_t& cursor, const Rational& x) {
    // x is the left end of a merged piece; advance h's cursor monotonically.
    const auto& b = h.breakpoints_;
    if (x < b.front() || x >= b.back()) return std::int64_t{0};
    while (cursor + 1 < b.size() && b[cursor + 1] <= x) ++cursor;
    return h.values_[cursor];
  };
  std::vector<std::int64_t> vals;
  vals.reserve(bp.size() - 1);
  std::size_t cf = 0, cg = 0;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    vals.push_back(piece_value(f, cf, bp[i]) + piece_value(g, cg, bp[i]));
  StepFunction out;
  out.breakpoints_ = std::move(bp);
  out.values_ = std::move(vals);
  out.scale_ = f.scale_;
  out.canonicalize();
  return out;
}

}  // namespace favard
