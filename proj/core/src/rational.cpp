#include "favard/rational.hpp"

#include "favard/error.hpp"

#include <cctype>

namespace favard {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& v) { return v.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw DomainError("malformed rational '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt f = frac.empty() ? BigInt(0) : BigInt{std::string(frac)};
    BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac.size()));
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) throw DomainError("malformed number '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(const BigInt& v) { return v.convert_to<double>(); }

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace favard
