#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace caterpillar {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// 50 decimal digits of working precision; table constants need ~10-30.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const BigInt& value);
Real to_real(const BigRat& value);

// Fixed-point decimal with round-half-even ties, exact for rationals.
std::string format_decimal(const BigRat& value, int places);
std::string format_decimal(const Real& value, int places);

// Shortest-ish rendering at the given number of significant digits.
std::string format_significant(const Real& value, int digits);

}  // namespace caterpillar
