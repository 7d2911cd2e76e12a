#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fdb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Identifier of an independent variable (x1, x2, ...) or a random variable
/// (X1, X2, ...). Always >= 1.
using VarId = std::uint32_t;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
Rational power(const Rational& base, unsigned exponent);

/// Decimal rendering of an exact integer.
std::string to_string(const BigInt& value);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise or on q = 0.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

} // namespace fdb
