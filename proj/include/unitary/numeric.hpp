#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unitary {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rationals stand in for the complex ground field: every structure
/// constant of the algebra is 0 or 1, so nothing is lost.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Decimal expansion of r truncated toward zero after `digits` places.
std::string to_decimal(const Rational& r, int digits);

/// Generalised binomial coefficient C(top, bottom) = top(top-1)...(top-bottom+1)/bottom!
/// for bottom >= 0 (top may be negative); zero for bottom < 0.
BigInt binomial(std::int64_t top, std::int64_t bottom);

}  // namespace unitary
