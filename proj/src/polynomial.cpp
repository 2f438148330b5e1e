#include "perispec/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace perispec {

namespace {
unsigned degree_of(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}
}  // namespace

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PotentialPolynomial PotentialPolynomial::constant(int numVars, Rational c) {
    PotentialPolynomial p(numVars);
    p.add_term(Monomial(numVars, 0), c);
    return p;
}

PotentialPolynomial PotentialPolynomial::variable(int numVars, int v) {
    if (v < 0 || v >= numVars) throw std::out_of_range("variable index out of range");
    PotentialPolynomial p(numVars);
    Monomial m(numVars, 0);
    m[v] = 1;
    p.add_term(m, Rational(1));
    return p;
}

unsigned PotentialPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, degree_of(mono));
    return d;
}

unsigned PotentialPolynomial::min_term_degree() const {
    if (terms_.empty()) return 0;
    // Graded order puts the lowest-degree term first.
    return degree_of(terms_.begin()->first);
}

bool PotentialPolynomial::coefficients_integral() const {
    for (const auto& [mono, coeff] : terms_)
        if (denominator(coeff) != 1) return false;
    return true;
}

void PotentialPolynomial::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(mono.size()) != numVars_)
        throw std::invalid_argument("monomial arity mismatch");
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PotentialPolynomial& PotentialPolynomial::operator+=(const PotentialPolynomial& o) {
    if (numVars_ != o.numVars_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("polynomial arity mismatch");
    if (terms_.empty()) numVars_ = std::max(numVars_, o.numVars_);
    for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
    return *this;
}

PotentialPolynomial& PotentialPolynomial::operator-=(const PotentialPolynomial& o) {
    if (numVars_ != o.numVars_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("polynomial arity mismatch");
    if (terms_.empty()) numVars_ = std::max(numVars_, o.numVars_);
    for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
    return *this;
}

PotentialPolynomial& PotentialPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= c;
    return *this;
}

PotentialPolynomial operator*(const PotentialPolynomial& a, const PotentialPolynomial& b) {
    if (a.numVars_ != b.numVars_ && !a.terms_.empty() && !b.terms_.empty())
        throw std::invalid_argument("polynomial arity mismatch");
    PotentialPolynomial prod(std::max(a.numVars_, b.numVars_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            prod.add_term(m, ca * cb);
        }
    }
    return prod;
}

PotentialPolynomial PotentialPolynomial::pow(unsigned e) const {
    PotentialPolynomial acc = constant(numVars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

ComplexRational PotentialPolynomial::evaluate(const std::vector<ComplexRational>& values) const {
    if (static_cast<int>(values.size()) != numVars_)
        throw std::invalid_argument("evaluation point arity mismatch");

    std::vector<uint32_t> maxExp(numVars_, 0);
    for (const auto& [mono, coeff] : terms_)
        for (int v = 0; v < numVars_; ++v) maxExp[v] = std::max(maxExp[v], mono[v]);

    std::vector<std::vector<ComplexRational>> powers(numVars_);
    for (int v = 0; v < numVars_; ++v) {
        powers[v].resize(maxExp[v] + 1);
        powers[v][0] = ComplexRational{Rational(1)};
        for (uint32_t e = 1; e <= maxExp[v]; ++e) powers[v][e] = powers[v][e - 1] * values[v];
    }

    ComplexRational sum;
    for (const auto& [mono, coeff] : terms_) {
        ComplexRational term{coeff};
        for (int v = 0; v < numVars_; ++v)
            if (mono[v] != 0) term *= powers[v][mono[v]];
        sum += term;
    }
    return sum;
}

std::string PotentialPolynomial::to_string(const std::string& varPrefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string monoStr;
        for (size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            if (!monoStr.empty()) monoStr += "*";
            monoStr += varPrefix + std::to_string(v);
            if (mono[v] > 1) monoStr += "^" + std::to_string(mono[v]);
        }
        if (monoStr.empty()) {
            out += rational_to_string(c);
        } else if (c == 1) {
            out += monoStr;
        } else {
            out += rational_to_string(c) + "*" + monoStr;
        }
    }
    return out;
}

}  // namespace perispec
