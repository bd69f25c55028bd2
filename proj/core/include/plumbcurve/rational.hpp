#pragma once
// Exact integers and rationals. Thin aliases over Boost.Multiprecision.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational q(long long num, long long den = 1);
// n/d with any sign of d; throws std::domain_error when d == 0
Rational frac(const BigInt& n, const BigInt& d);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);
std::string to_string(const BigInt& v);

Rational parse_rational(const std::string& s);

bool is_integer(const Rational& v);

}  // namespace pc
