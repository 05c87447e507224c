#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pants {

// All angle arithmetic is exact.  Angles live in half-turn units, i.e. the
// stored value r means an angle of r*pi; a full turn is 2.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Reduce into [0, 2).
Rat mod_two(const Rat& r);

// Accepts "p", "-p", "p/q" (q > 0 after normalization).
Rat parse_rational(const std::string& text);

// "p/q" or just "p" when the denominator is 1.
std::string to_string(const Rat& r);

}  // namespace pants
