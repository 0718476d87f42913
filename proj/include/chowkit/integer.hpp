#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace chowkit {

using Integer = mpz_class;

// Decimal with optional leading sign. Returns nullopt on anything else.
std::optional<Integer> parse_integer(std::string_view text);

std::string to_string(const Integer& x);

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// g = s*a + t*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t);

bool fits_long(const Integer& x);

}  // namespace chowkit
