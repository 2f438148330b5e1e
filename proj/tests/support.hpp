#pragma once

#include "perispec/graph.hpp"

#include <cstdint>
#include <random>

namespace testsupport {

using perispec::ComplexRational;
using perispec::Potential;
using perispec::Rational;

// Bounded draw straight from the raw 64-bit stream; bias is irrelevant here
// and the values stay identical across standard libraries.
inline uint64_t draw(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

// Uniform-ish rational in [-3, 3] with denominator at most 8.
inline Rational random_rational(std::mt19937_64& rng) {
    int den = 1 + static_cast<int>(draw(rng, 8));
    int num = -3 * den + static_cast<int>(draw(rng, static_cast<uint64_t>(6 * den + 1)));
    return Rational(num, den);
}

inline Potential random_potential(int numVertices, bool withImaginaryParts,
                                  std::mt19937_64& rng) {
    Potential q;
    for (int v = 0; v < numVertices; ++v) {
        Rational re = random_rational(rng);
        Rational im = withImaginaryParts ? random_rational(rng) : Rational(0);
        q.values.push_back(ComplexRational{re, im});
    }
    return q;
}

}  // namespace testsupport
