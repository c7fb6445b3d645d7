#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace celltrees {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Renders a rational as "p" when the denominator is 1, else "p/q" in lowest
/// terms. This is the canonical form used throughout the JSON interchange.
std::string rat_to_string(const Rat& x);

/// Parses "p" or "p/q" (optional leading '-'). Throws format_error on junk or
/// a zero denominator.
Rat parse_rational(const std::string& text);

/// x^e for integer e of either sign; requires x != 0 when e < 0.
Rat rat_pow(const Rat& x, long long e);

Int int_pow(const Int& base, unsigned long long e);

}  // namespace celltrees
