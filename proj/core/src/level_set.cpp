#include "favard/level_set.hpp"

#include "favard/error.hpp"

#include <algorithm>

namespace favard {

LevelCursor::LevelCursor(std::int64_t base, const std::vector<std::int64_t>& digits, int level)
    : base_(base), digits_(digits), index_(static_cast<std::size_t>(level), 0) {
  place_.resize(index_.size());
  BigInt p = 1;
  for (std::size_t j = index_.size(); j-- > 0;) {
    place_[j] = p;
    p *= base_;
  }
  value_ = 0;
  for (std::size_t j = 0; j < index_.size(); ++j) value_ += place_[j] * digits.front();
  done_ = digits.empty();
}

void LevelCursor::advance() {
  const auto& d = digits_;
  for (std::size_t j = index_.size(); j-- > 0;) {
    auto& i = index_[j];
    if (i + 1 < d.size()) {
      value_ += place_[j] * (d[i + 1] - d[i]);
      ++i;
      return;
    }
    value_ -= place_[j] * (d[i] - d.front());
    i = 0;
  }
  done_ = true;
}

std::uint64_t checked_count(std::size_t digit_count, int level, const Limits& limits) {
  if (level < 0) throw DomainError("level must be nonnegative");
  std::uint64_t count = 1;
  for (int j = 0; j < level; ++j) {
    if (count > limits.max_elements / digit_count)
      throw ResourceError(std::to_string(digit_count) + "^" + std::to_string(level) +
                          " elements exceed the cap of " + std::to_string(limits.max_elements));
    count *= digit_count;
  }
  if (count > limits.max_elements)
    throw ResourceError("element count exceeds the cap of " + std::to_string(limits.max_elements));
  return count;
}

LevelSet level_set(const DigitSystem& ds, int n, Side side, const Limits& limits) {
  const auto& digits = ds.digits(side);
  LevelSet out;
  out.level = n;
  out.base = ds.base();
  out.elements.reserve(checked_count(digits.size(), n, limits));
  for (LevelCursor c(ds.base(), digits, n); !c.done(); c.advance()) out.elements.push_back(c.value());
  return out;
}

std::vector<double> level_values(const DigitSystem& ds, int n, Side side, const Limits& limits) {
  const auto& digits = ds.digits(side);
  checked_count(digits.size(), n, limits);
  const double inv = 1.0 / static_cast<double>(ds.base());
  std::vector<double> values{0.0};
  for (int level = 0; level < n; ++level) {
    std::vector<double> next;
    next.reserve(values.size() * digits.size());
    for (auto d : digits)
      for (double v : values) next.push_back((static_cast<double>(d) + v) * inv);
    values = std::move(next);
  }
  return values;
}

bool split_identity_check(const LevelSet& whole, const LevelSet& coarse, const LevelSet& fine) {
  if (coarse.level + fine.level != whole.level) return false;
  const BigInt shift = fine.denominator();
  std::vector<BigInt> sums;
  sums.reserve(coarse.elements.size() * fine.elements.size());
  for (const auto& u : coarse.elements)
    for (const auto& v : fine.elements) sums.push_back(shift * u + v);
  std::sort(sums.begin(), sums.end());
  return sums == whole.elements;
}

bool split_identity_check(const DigitSystem& ds, int m, int n, Side side, const Limits& limits) {
  if (n < 0 || n >= m) throw DomainError("split identity needs 0 <= n < m");
  return split_identity_check(level_set(ds, m, side, limits), level_set(ds, m - n, side, limits),
                              level_set(ds, n, side, limits));
}

}  // namespace favard
