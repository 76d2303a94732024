#include "wkern/bigint.hpp"

#include <cctype>

namespace wkern {

std::optional<BigInt> parse_decimal(std::string_view text, bool allow_negative) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    if (!allow_negative) return std::nullopt;
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  // cpp_int would read a leading 0 as octal, so build the value by hand.
  BigInt value = 0;
  for (char c : text) {
    value *= 10;
    value += c - '0';
  }
  if (negative) value = -value;
  return value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_decimal(text.substr(0, slash));
    auto den = parse_decimal(text.substr(slash + 1), false);
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    auto w = whole.empty() ? std::optional<BigInt>(0) : parse_decimal(whole, false);
    auto f = frac.empty() ? std::optional<BigInt>(0) : parse_decimal(frac, false);
    if (!w || !f) return std::nullopt;
    BigInt scale = ipow(10, frac.size());
    Rational r(*w * scale + *f, scale);
    return negative ? Rational(-r) : r;
  }
  auto v = parse_decimal(text);
  if (!v) return std::nullopt;
  return Rational(*v);
}

std::string to_string(const Rational& value) {
  return to_decimal(boost::multiprecision::numerator(value)) + "/" +
         to_decimal(boost::multiprecision::denominator(value));
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  BigInt a = boost::multiprecision::abs(value);
  return boost::multiprecision::msb(a) + 1;
}

std::size_t ceil_log2(const BigInt& value) {
  if (value <= 1) return 0;
  return bit_length(BigInt(value - 1));
}

BigInt ipow(const BigInt& base, std::size_t exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace wkern
