#include "perispec/builtins.hpp"
#include "perispec/cycles.hpp"
#include "perispec/invariants.hpp"
#include "perispec/lattice.hpp"

#include <doctest.h>

#include <map>

using namespace perispec;

namespace {

// Independent route to n * I_n^m: every rooted closed path through an added
// loop contributes its raw weight monomial, with no rotation classes, no
// primality, and no 1/r factors anywhere.
std::map<IndexVector, PotentialPolynomial> path_sums(const FundamentalGraph& g, int n) {
    auto mod = modified_graph(g);
    ClosedPathFilter f;
    f.requireAddedLoop = true;
    std::map<IndexVector, PotentialPolynomial> sums;
    for (const auto& p : enumerate_closed_paths(mod, n, f)) {
        auto [it, inserted] = sums.try_emplace(p.index, PotentialPolynomial(g.numVertices));
        it->second.add_term(p.weight, Rational(1));
    }
    return sums;
}

void check_graph(const FundamentalGraph& g, int maxN) {
    for (int n = 1; n <= maxN; ++n) {
        auto sums = path_sums(g, n);
        auto t = invariant_table(g, n);

        // Every realized index sits inside the declared support box.
        for (const auto& [m, poly] : sums) CHECK(t.in_box(n, m));

        // Walk the whole box; absent map entries must pair with zero cells.
        IndexVector radius = t.box_radius(n);
        IndexVector m(g.dim);
        for (int j = 0; j < g.dim; ++j) m[j] = -radius[j];
        PotentialPolynomial total(g.numVertices);
        while (true) {
            auto it = sums.find(m);
            auto brute = it != sums.end() ? it->second : PotentialPolynomial(g.numVertices);
            CHECK_MESSAGE(brute == t.get(n, m) * Rational(n), "n=", n, " m=", index_to_string(m));
            total += brute;
            int j = g.dim - 1;
            while (j >= 0 && m[j] == radius[j]) {
                m[j] = -radius[j];
                --j;
            }
            if (j < 0) break;
            ++m[j];
        }
        CHECK(total == t.marginal(n) * Rational(n));
    }
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("pendant lattice, orders past the vertex count") { check_graph(builtin_pendant(), 6); }

TEST_CASE("kagome lattice") { check_graph(builtin_kagome(), 5); }

TEST_CASE("rings") {
    for (int nu = 2; nu <= 5; ++nu) check_graph(builtin_cycle(nu), nu);
}

TEST_CASE("square lattice quotients") {
    check_graph(build_zd(ZdSpec{{2, 2}}), 4);
    check_graph(build_zd(ZdSpec{{2, 3}}), 4);
}

TEST_CASE("path weights count added loop visits") {
    auto mod = modified_graph(builtin_pendant());
    for (const auto& p : enumerate_closed_paths(mod, 4)) {
        unsigned loops = 0;
        for (int id : p.edgeIds)
            if (mod.is_added_loop(id)) ++loops;
        unsigned degree = 0;
        for (uint32_t e : p.weight) degree += e;
        CHECK(degree == loops);
    }
}

}  // TEST_SUITE
