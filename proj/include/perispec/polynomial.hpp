#pragma once

#include "perispec/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace perispec {

// Exponent vector over the vertex potentials q_0 .. q_{nVars-1}.
using Monomial = std::vector<uint32_t>;

// Total degree first, then plain lexicographic on the exponent vector. This
// fixes the iteration order everywhere a polynomial is serialized.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class PotentialPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    PotentialPolynomial() = default;
    explicit PotentialPolynomial(int numVars) : numVars_(numVars) {}

    static PotentialPolynomial constant(int numVars, Rational c);
    static PotentialPolynomial variable(int numVars, int v);

    int num_vars() const { return numVars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    unsigned total_degree() const;      // max over terms, 0 for the zero polynomial
    unsigned min_term_degree() const;   // min over terms, 0 for the zero polynomial
    bool coefficients_integral() const;

    void add_term(const Monomial& mono, const Rational& coeff);

    PotentialPolynomial& operator+=(const PotentialPolynomial& o);
    PotentialPolynomial& operator-=(const PotentialPolynomial& o);
    PotentialPolynomial& operator*=(const Rational& c);
    friend PotentialPolynomial operator+(PotentialPolynomial a, const PotentialPolynomial& b) {
        return a += b;
    }
    friend PotentialPolynomial operator-(PotentialPolynomial a, const PotentialPolynomial& b) {
        return a -= b;
    }
    friend PotentialPolynomial operator*(PotentialPolynomial a, const Rational& c) { return a *= c; }
    friend PotentialPolynomial operator*(const PotentialPolynomial& a, const PotentialPolynomial& b);
    PotentialPolynomial pow(unsigned e) const;

    friend bool operator==(const PotentialPolynomial& a, const PotentialPolynomial& b) {
        return a.numVars_ == b.numVars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PotentialPolynomial& a, const PotentialPolynomial& b) {
        return !(a == b);
    }

    ComplexRational evaluate(const std::vector<ComplexRational>& values) const;

    // Graded-lex term list, e.g. "1/3*q0^3 + q1*q2 - 2*q1". Zero prints "0".
    std::string to_string(const std::string& varPrefix = "q") const;

private:
    int numVars_ = 0;
    TermMap terms_;
};

}  // namespace perispec
