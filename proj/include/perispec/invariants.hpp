#pragma once

#include "perispec/cycles.hpp"
#include "perispec/graph.hpp"
#include "perispec/polynomial.hpp"

#include <map>
#include <utility>

namespace perispec {

// I_n^m and I_n for n = 1..nuMax, exact in the vertex potentials. Quasimomentum
// cells are kept for every m in the per-coordinate box |m_j| <= (n-1)*maxAbs_j,
// zero polynomials included, so absence of support is visible data rather than
// a missing key.
struct InvariantTable {
    int numVertices = 0;
    int dim = 0;
    int nuMax = 0;
    IndexVector maxAbsIndex;

    std::map<std::pair<int, IndexVector>, PotentialPolynomial> entries;
    std::map<int, PotentialPolynomial> marginals;

    IndexVector box_radius(int n) const;
    bool in_box(int n, const IndexVector& m) const;
    // Zero polynomial for any m outside the box; throws for n out of range.
    PotentialPolynomial get(int n, const IndexVector& m) const;
    const PotentialPolynomial& marginal(int n) const;
};

// Sum of (1/r) * omega^r over prime cycles through an added loop with
// r*length = n and r*index = m.
PotentialPolynomial invariant_floquet(const FundamentalGraph& g, int n, const IndexVector& m,
                                      int lengthCap = kDefaultLengthCap);

// Same sum without the index constraint.
PotentialPolynomial invariant_periodic(const FundamentalGraph& g, int n,
                                       int lengthCap = kDefaultLengthCap);

// One enumeration pass filling every cell and marginal up to nuMax.
InvariantTable invariant_table(const FundamentalGraph& g, int nuMax,
                               int lengthCap = kDefaultLengthCap);

// Independent implementation of the n <= 3 cases from direct scans over loop
// edges and 2-cycles of the base graph; shares nothing with the generic
// enumeration above.
PotentialPolynomial closed_form_floquet(const FundamentalGraph& g, int n, const IndexVector& m);
PotentialPolynomial closed_form_periodic(const FundamentalGraph& g, int n);

// h_1 (sum) and h_2 (complete homogeneous of degree 2, squares included) of a
// list of polynomials.
PotentialPolynomial symmetric_h(int s, const std::vector<PotentialPolynomial>& args);

// Solvability of the GF(2) system: one color bit per vertex, one parity bit
// per period direction, and c(u) + c(v) + <sigma, tau(e)> = 1 per edge. This
// is 2-colorability compatible with the period lattice, and coincides with
// bipartiteness of the periodic graph whenever that graph is connected (edge
// indices generating all of Z^dim, see validate_full_rank).
bool periodic_graph_bipartite(const FundamentalGraph& g);

// First two invariant orders above the shortest cycle length n(m) realizing a
// primitive index m; these are degree-1 and degree-2 polynomials built from
// vertex sums over the shortest cycles.
struct LinearQuadraticResult {
    IndexVector m;
    int shortestLength = 0;       // n(m)
    bool bipartite = false;
    size_t numShortest = 0;       // |P_{n(m)}^m|
    size_t numShortestPlusOne = 0;
    PotentialPolynomial linear;     // I_{n(m)+1}^m
    PotentialPolynomial quadratic;  // I_{n(m)+2}^m
};

LinearQuadraticResult linear_quadratic_invariants(const FundamentalGraph& g, const IndexVector& m,
                                                  int lengthCap = kDefaultLengthCap);

ComplexRational evaluate(const PotentialPolynomial& p, const Potential& q);

}  // namespace perispec
