#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rankone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string to_string(const Rational& x) { return x.str(); }

// x^n for n >= 0.
inline Rational rational_pow(const Rational& x, int n) {
    Rational out = 1;
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

inline BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

inline Rational multinomial(int m, int i, int j, int k) {
    return Rational(factorial(m), factorial(i) * factorial(j) * factorial(k));
}

}  // namespace rankone
