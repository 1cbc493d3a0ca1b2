#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

#include "freecalc/errors.hpp"

namespace freecalc {

/// Exact arbitrary-precision integer (Catalan numbers grow past 64 bits quickly).
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Default scalar kind for all combinatorial identities.
using Rational = boost::multiprecision::cpp_rational;

/// Complex floating-point scalar, used for data that originates in operator
/// or random-matrix models.
using Complex = std::complex<double>;

/// Uniform access to the pieces of a scalar the engines need: additive and
/// multiplicative units, and a magnitude for tolerance checks. Rational
/// magnitudes stay rational so exact checks can assert equality with zero.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    using Magnitude = Rational;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Magnitude abs(const Rational& x) { return boost::multiprecision::abs(x); }
    static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Complex> {
    using Magnitude = double;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Magnitude abs(const Complex& x) { return std::abs(x); }
    static std::string str(const Complex& x) {
        return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
    }
};

template <>
struct ScalarTraits<double> {
    using Magnitude = double;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static Magnitude abs(double x) { return x < 0 ? -x : x; }
    static std::string str(double x) { return std::to_string(x); }
};

/// Parses "p/q", "p", or "-p/q". Rejects anything else.
Rational parse_rational(const std::string& text);

/// Canonical decimal-free rendering: "p/q" or "p".
std::string rational_str(const Rational& x);

inline double to_double(const Rational& x) { return static_cast<double>(x); }

}  // namespace freecalc
