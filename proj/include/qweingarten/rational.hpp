#ifndef QWEINGARTEN_RATIONAL_HPP
#define QWEINGARTEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qweingarten {

using BigInt = mpz_class;

// Always canonical: positive denominator, reduced, zero is 0/1.
using BigRational = mpq_class;

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

// Accepts "num" or "num/den" in decimal; throws std::invalid_argument on a
// malformed string or a zero denominator. The result is canonicalized.
BigRational parse_rational(std::string_view text);

// Decimal rendering rounded half away from zero to `digits` fractional
// digits, computed in integer arithmetic.
std::string to_decimal(const BigRational& value, int digits);

BigInt pow(const BigInt& base, unsigned long exponent);
BigRational pow(const BigRational& base, unsigned long exponent);

} // namespace qweingarten

#endif
