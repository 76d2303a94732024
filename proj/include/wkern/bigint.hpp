#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wkern {

/// Arbitrary-precision signed integer. Used for every weight and target.
using BigInt = boost::multiprecision::cpp_int;

/// Non-negative weight. Same representation as BigInt; the sign invariant is
/// enforced by `validate` on the enclosing instance, not by the type.
using BigWeight = BigInt;

/// Exact rational, used for the failure probability epsilon.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a base-10 integer. Accepts an optional leading '-' only when
/// `allow_negative` is set. Returns nullopt on any other character, on an
/// empty string, or on a leading '+'.
std::optional<BigInt> parse_decimal(std::string_view text, bool allow_negative = true);

std::string to_decimal(const BigInt& value);

/// Parses "p/q", an integer, or a plain decimal fraction such as "0.125".
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Number of bits needed to write |value| in binary; 0 for value 0.
std::size_t bit_length(const BigInt& value);

/// ceil(log2(value)) for value >= 1.
std::size_t ceil_log2(const BigInt& value);

BigInt ipow(const BigInt& base, std::size_t exponent);

/// Remainder in [0, modulus) for any sign of `value`.
BigInt floor_mod(const BigInt& value, const BigInt& modulus);

/// Binomial coefficient as a 64-bit value; callers keep arguments small.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace wkern
