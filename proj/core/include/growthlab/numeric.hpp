#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace growthlab {

/// Exact arbitrary-precision integer. All group counts and element data use
/// this or Rat; floating point never enters element arithmetic.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// 50-significant-digit binary float used for root/log extraction only.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Natural log of an exact positive integer, accurate to well below 1e-12.
Real log_int(const Int& value);

/// value^(1/k) for an exact integer value >= 1 and k >= 1.
Real int_root(const Int& value, long k);

/// 2^(1/k) for an exact integer k >= 1.
Real root_of_two(const Int& k);

/// Renders x with exactly `digits` fractional digits, round-half-even.
/// No scientific notation; used for all emitted decimals.
std::string render_decimal(const Real& x, int digits = 12);

/// Parses a rational from "p/q" or "p" with arbitrary-precision parts.
Rat parse_rational(const std::string& text);

std::string rational_to_string(const Rat& value);

}  // namespace growthlab
