#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace grc {

// Exact rational arithmetic for all probability values. cpp_rational keeps
// gcd(num, den) == 1 and den > 0 after every operation, so equality is
// structural and serialization is canonical.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical text form: "a/b" in lowest terms, or "a" when the denominator
// is one. This is exactly what Rat::str() produces.
std::string rat_to_string(const Rat& q);

// Strict inverse of rat_to_string: optional leading '-', digits, optional
// "/digits" with a positive denominator. Anything else is rejected.
Rat rat_from_string(const std::string& text);

bool is_probability(const Rat& q);  // 0 <= q <= 1

double rat_to_double(const Rat& q);

}  // namespace grc
