#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace favard {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0; integers keep the "/1" so the form is uniform.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Accepts "p/q", "p", and finite decimals such as "7.9" or "-0.25",
/// all converted exactly.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);
double to_double(const BigInt& v);

BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace favard
