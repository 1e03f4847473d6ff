#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace maxlin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }

// Strict parser for "p" or "p/q" with optional leading '-'; q must be positive.
Rational parse_rational(const std::string& text);

} // namespace maxlin
