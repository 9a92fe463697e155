#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tnpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(p/q) with floor semantics for negative values.
Int floor_rational(const Rational& r);

// r^e with the convention 0^0 = 1 (polynomial-piece evaluation).
Rational pow_rational(const Rational& r, unsigned e);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

Rational abs_rational(const Rational& r);

double to_double(const Rational& r);

// Canonical lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

// Accepts "p", "p/q" and plain decimals ("-0.5"). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace tnpoly
