#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semifree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

} // namespace semifree
