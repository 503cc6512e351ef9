#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace virial {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q"; throws ArgumentError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Bits needed for the larger of |numerator| and denominator.
std::size_t bit_size(const Rational& q);

double to_double(const Rational& q);

}  // namespace virial
