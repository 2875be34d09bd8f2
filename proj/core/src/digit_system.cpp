#include "favard/digit_system.hpp"

#include "favard/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace favard {

namespace {

std::map<std::uint64_t, unsigned> factorize(std::uint64_t v) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t p = 2; p * p <= v; ++p)
    while (v % p == 0) {
      ++f[p];
      v /= p;
    }
  if (v > 1) ++f[v];
  return f;
}

void check_digits(std::int64_t base, std::vector<std::int64_t>& digits, const char* label) {
  for (auto d : digits)
    if (d < 0 || d >= base)
      throw DigitRangeError(std::string(label) + " digit " + std::to_string(d) +
                            " outside [0, " + std::to_string(base - 1) + "]");
  std::sort(digits.begin(), digits.end());
  if (std::adjacent_find(digits.begin(), digits.end()) != digits.end())
    throw DuplicateDigitError(std::string(label) + " contains a repeated digit");
}

}  // namespace

double LogRatio::value() const {
  return std::log(static_cast<double>(numerator_base)) /
         std::log(static_cast<double>(denominator_base));
}

std::optional<Rational> LogRatio::exact() const {
  if (numerator_base == 1) return Rational(0);
  auto num = factorize(numerator_base);
  auto den = factorize(denominator_base);
  if (num.size() != den.size()) return std::nullopt;
  std::optional<Rational> ratio;
  for (const auto& [p, e] : num) {
    auto it = den.find(p);
    if (it == den.end()) return std::nullopt;
    Rational r(BigInt(e), BigInt(it->second));
    if (ratio && *ratio != r) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

DigitSystem validate_digit_system(std::int64_t base, std::vector<std::int64_t> a,
                                  std::vector<std::int64_t> b) {
  if (base < 2) throw DigitRangeError("base must be at least 2, got " + std::to_string(base));
  check_digits(base, a, "A");
  check_digits(base, b, "B");
  if (a.size() < 2 || b.size() < 2)
    throw CardinalityError("|A| and |B| must both be at least 2");
  if (static_cast<std::int64_t>(a.size() * b.size()) != base)
    throw CardinalityError("|A|*|B| = " + std::to_string(a.size() * b.size()) +
                           " differs from K = " + std::to_string(base));

  DigitSystem ds;
  ds.base_ = base;
  ds.a_ = std::move(a);
  ds.b_ = std::move(b);
  auto k = static_cast<std::uint64_t>(base);
  ds.exponents_.alpha = {ds.a_.size(), k};
  ds.exponents_.beta = {ds.b_.size(), k};
  ds.exponents_.gamma = ds.a_.size() <= ds.b_.size() ? ds.exponents_.alpha : ds.exponents_.beta;
  return ds;
}

DigitSystem DigitSystem::reflected_x() const {
  std::vector<std::int64_t> mirrored;
  mirrored.reserve(a_.size());
  for (auto d : a_) mirrored.push_back(base_ - 1 - d);
  return validate_digit_system(base_, std::move(mirrored), b_);
}

DigitSystem DigitSystem::swapped() const { return validate_digit_system(base_, b_, a_); }

std::string DigitSystem::describe() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<std::int64_t>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  os << "K=" << base_ << " A=";
  list(a_);
  os << " B=";
  list(b_);
  return os.str();
}

DigitSystem four_corner() { return validate_digit_system(4, {0, 3}, {0, 3}); }

}  // namespace favard
