#pragma once

// Exact arithmetic used for every set-membership decision in the library.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace holedim {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "n", or a plain decimal such as "0.32" into an exact value.
/// Exponent notation, "inf" and "nan" are rejected so that binary floating
/// point never leaks into a hole endpoint.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& x);

/// Decimal rendering with exactly `places` digits after the point, rounded
/// half away from zero.
std::string to_decimal_string(const Rational& x, unsigned places);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

/// base^exponent as a big integer.
BigInt big_pow(unsigned base, unsigned exponent);

/// Checked conversion; throws std::overflow_error when the value does not fit.
std::uint64_t to_u64(const BigInt& x);

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace holedim
