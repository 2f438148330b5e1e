#include "perispec/rational.hpp"

namespace perispec {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
    }
}

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

ComplexRational pow(const ComplexRational& base, unsigned exp) {
    ComplexRational acc{Rational(1)};
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

std::string complex_rational_to_string(const ComplexRational& z) {
    if (z.is_real()) return rational_to_string(z.re);
    std::string imag = rational_to_string(z.im) + "*i";
    if (z.re == 0) return imag;
    if (z.im > 0) return rational_to_string(z.re) + "+" + imag;
    return rational_to_string(z.re) + imag;  // imag already carries the minus sign
}

double to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace perispec
