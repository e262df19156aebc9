#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace circact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p/q"; the denominator is printed even when it equals 1.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with optional leading sign. Rejects float syntax.
std::optional<Rational> parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Narrowing conversion; nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace circact
