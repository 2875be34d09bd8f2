#pragma once

#include "favard/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace favard {

/// log(numerator_base) / log(denominator_base), kept symbolic so that
/// ratios such as log 2 / log 4 stay exactly 1/2.
struct LogRatio {
  std::uint64_t numerator_base = 1;
  std::uint64_t denominator_base = 2;

  double value() const;
  /// Exact value when both bases are powers of a common integer.
  std::optional<Rational> exact() const;
  friend bool operator==(const LogRatio&, const LogRatio&) = default;
};

struct Exponents {
  LogRatio alpha;
  LogRatio beta;
  LogRatio gamma;  // the smaller of alpha and beta
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

enum class Side { a, b };

/// Base K with digit sets A, B. Construct through validate_digit_system.
class DigitSystem {
public:
  std::int64_t base() const noexcept { return base_; }
  const std::vector<std::int64_t>& a_digits() const noexcept { return a_; }
  const std::vector<std::int64_t>& b_digits() const noexcept { return b_; }
  const std::vector<std::int64_t>& digits(Side side) const noexcept {
    return side == Side::a ? a_ : b_;
  }
  const Exponents& exponents() const noexcept { return exponents_; }

  /// (K, A', B) with A' = {K-1-a}: the mirror image of the set in x.
  DigitSystem reflected_x() const;
  /// (K, B, A): the mirror image in the diagonal.
  DigitSystem swapped() const;

  std::string describe() const;

  friend bool operator==(const DigitSystem&, const DigitSystem&) = default;

private:
  friend DigitSystem validate_digit_system(std::int64_t, std::vector<std::int64_t>,
                                           std::vector<std::int64_t>);
  DigitSystem() = default;

  std::int64_t base_ = 0;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> b_;
  Exponents exponents_;
};

/// Throws DigitRangeError, DuplicateDigitError or CardinalityError.
/// Digits may be given in any order; they are stored ascending.
DigitSystem validate_digit_system(std::int64_t base, std::vector<std::int64_t> a,
                                  std::vector<std::int64_t> b);

/// The 4-corner set: K = 4, A = B = {0, 3}.
DigitSystem four_corner();

}  // namespace favard
