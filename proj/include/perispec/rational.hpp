#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace perispec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

// Parses "p", "-p", "p/q" with arbitrary-size integer parts. q must be positive
// after normalization; "1/0" is rejected.
Rational parse_rational(const std::string& text);

// "p/q" with q > 0 and gcd(p,q) = 1, or just "p" when q == 1.
std::string rational_to_string(const Rational& r);

// Exact complex number with rational real and imaginary parts. Only the ring
// operations needed for potentials and invariant evaluation live here.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

ComplexRational pow(const ComplexRational& base, unsigned exp);

// "a/b" for real values, otherwise "a/b+c/d*i" (or "-c/d*i" etc.).
std::string complex_rational_to_string(const ComplexRational& z);

double to_double(const Rational& r);

}  // namespace perispec
