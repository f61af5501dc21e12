#ifndef PETERSON_NUMERIC_HPP
#define PETERSON_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace peterson {

// All coefficient arithmetic is exact.  Rationals are kept in lowest terms
// with positive denominator (the backend normalizes on every operation).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// Exact binomial coefficient; zero for k < 0 or k > n.
BigInt binomial(int n, int k);

// "7", "-3/4"; the "/1" of an integer is omitted.
std::string format_rational(const Rational& q);

// Accepts optional sign, integer, optional "/denominator".  Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace peterson

#endif  // PETERSON_NUMERIC_HPP
