#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace bigraph {

// Exact scalars. Expression templates are disabled so that the types behave
// like plain values inside Eigen matrices and `auto` declarations.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q". Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Fixed-point rendering with `places` digits after the point, rounded half
/// away from zero. Pure integer arithmetic.
std::string to_decimal(const Rational& value, int places);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// 2^k as a Rational, k may be negative.
Rational power_of_two(int k);

}  // namespace bigraph
