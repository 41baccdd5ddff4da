#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lensgrid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

// reduced "num/den" form, always with an explicit denominator
inline std::string to_string(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text);

}
