#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fano {

using Integer = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Throws std::overflow_error when q == 0.
inline Rational frac(long long p, long long q) { return Rational(p) / q; }

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace fano
