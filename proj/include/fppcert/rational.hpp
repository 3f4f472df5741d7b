#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fppcert {

// All arithmetic in this library is exact. Integer/Rational never round,
// never overflow, and cpp_rational keeps values in lowest terms with a
// positive denominator by construction.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

inline std::string to_string(const Integer& n) {
    return n.str();
}

}  // namespace fppcert
