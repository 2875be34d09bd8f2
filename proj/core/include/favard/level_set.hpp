#pragma once

#include "favard/digit_system.hpp"
#include "favard/rational.hpp"

#include <cstdint>
#include <vector>

namespace favard {

/// Size limits shared by every enumeration.
struct Limits {
  std::uint64_t max_elements = std::uint64_t{1} << 24;
};

/// A^n (or B^n) as integer encodings sum_j d_j K^(n-j); the true point is
/// encoding / K^n.
struct LevelSet {
  int level = 0;
  std::int64_t base = 2;
  std::vector<BigInt> elements;  // ascending

  BigInt denominator() const { return ipow(BigInt(base), static_cast<unsigned>(level)); }
  Rational value(std::size_t i) const { return Rational(elements[i], denominator()); }
};

/// Walks the encodings of a level set in ascending order with a mixed-radix
/// counter, without materializing them.
class LevelCursor {
public:
  LevelCursor(std::int64_t base, const std::vector<std::int64_t>& digits, int level);

  bool done() const noexcept { return done_; }
  const BigInt& value() const noexcept { return value_; }
  void advance();

private:
  std::int64_t base_;
  std::vector<std::int64_t> digits_;
  std::vector<std::size_t> index_;  // index_[0] is the most significant digit
  std::vector<BigInt> place_;       // K^(n-1-j)
  BigInt value_;
  bool done_ = false;
};

/// |digits|^n; throws ResourceError when it exceeds the cap.
std::uint64_t checked_count(std::size_t digit_count, int level, const Limits& limits);

LevelSet level_set(const DigitSystem& ds, int n, Side side, const Limits& limits = {});

/// Points of A^n (or B^n) as doubles in [0, 1), ascending.
std::vector<double> level_values(const DigitSystem& ds, int n, Side side,
                                 const Limits& limits = {});

/// Checks A^m = K^n A^(m-n) + A^n on the given encodings.
bool split_identity_check(const LevelSet& whole, const LevelSet& coarse, const LevelSet& fine);
bool split_identity_check(const DigitSystem& ds, int m, int n, Side side = Side::a,
                          const Limits& limits = {});

}  // namespace favard
