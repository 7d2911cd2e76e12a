#include "fdb/numeric.hpp"

#include <stdexcept>

namespace fdb {

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        result = result * (n - k + i) / i;
    }
    return result;
}

std::string to_string(const BigInt& value)
{
    return value.str();
}

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text)
{
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    const BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const BigInt num = parse_bigint(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    const BigInt den(std::string{den_text});
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

} // namespace fdb

namespace fdb {

Rational power(const Rational& base, unsigned exponent)
{
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    return Rational(boost::multiprecision::pow(BigInt(numerator(base)), exponent),
                    boost::multiprecision::pow(BigInt(denominator(base)), exponent));
}

} // namespace fdb
