#include "perispec/builtins.hpp"
#include "perispec/invariants.hpp"
#include "perispec/lattice.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace perispec;

TEST_SUITE("lattice") {

TEST_CASE("vertex indexing round trips") {
    ZdSpec spec{{2, 3, 4}};
    CHECK(spec.numVertices() == 24);
    for (int id = 0; id < spec.numVertices(); ++id) {
        auto coords = zd_vertex_coords(spec, id);
        CHECK(zd_vertex_id(spec, coords) == id);
    }
    CHECK(zd_vertex_id(spec, {0, 0, 1}) == 1);  // last coordinate is fastest
    CHECK(zd_vertex_id(spec, {1, 0, 0}) == 12);
    CHECK_THROWS_AS(zd_vertex_id(spec, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(zd_vertex_id(spec, {0, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(zd_vertex_coords(spec, 24), std::invalid_argument);
}

TEST_CASE("lattice builder structure") {
    auto g = build_zd(ZdSpec{{3, 3}});
    CHECK(g.dim == 2);
    CHECK(g.numVertices == 9);
    CHECK(g.numDeclarations() == 18);  // one edge per vertex per axis
    for (int v = 0; v < g.numVertices; ++v) CHECK(g.degree(v) == 4);

    int wrapEdges = 0;
    for (int j = 0; j < g.numDeclarations(); ++j)
        if (!is_zero(g.edges[2 * j].index)) ++wrapEdges;
    CHECK(wrapEdges == 6);  // three per axis

    validate_graph(g);
    auto diag = validate_full_rank(g);
    CHECK(diag.fullLattice);

    CHECK_THROWS_AS(build_zd(ZdSpec{{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_zd(ZdSpec{{}}), std::invalid_argument);
}

TEST_CASE("period two axes fold into double edges") {
    auto g = build_zd(ZdSpec{{2}});
    CHECK(g.numVertices == 2);
    CHECK(g.numDeclarations() == 2);
    CHECK(g.degree(0) == 2);
    CHECK(g == builtin_cycle(2));
}

TEST_CASE("periodic closed forms match the generic enumeration") {
    for (const auto& periods :
         {std::vector<int>{4}, std::vector<int>{2, 2}, std::vector<int>{2, 3},
          std::vector<int>{3, 3}}) {
        ZdSpec spec{periods};
        auto g = build_zd(spec);
        auto t = invariant_table(g, 3);
        for (int n = 1; n <= 3; ++n)
            CHECK_MESSAGE(zd_periodic_closed_form(spec, n) == t.marginal(n), "n=", n);
    }
    CHECK_THROWS_AS(zd_periodic_closed_form(ZdSpec{{3}}, 4), std::invalid_argument);
}

TEST_CASE("axis closed forms match the generic enumeration") {
    for (const auto& periods : {std::vector<int>{2, 3}, std::vector<int>{3, 3}}) {
        ZdSpec spec{periods};
        auto g = build_zd(spec);
        for (int axis = 0; axis < spec.dim(); ++axis) {
            int p = spec.periods[axis];
            IndexVector m(spec.dim(), 0);
            m[axis] = 1;
            CHECK(zd_floquet_closed_form(spec, axis, 1) == invariant_floquet(g, p + 1, m));
            CHECK(zd_floquet_closed_form(spec, axis, 2) == invariant_floquet(g, p + 2, m));
        }
    }
    CHECK_THROWS_AS(zd_floquet_closed_form(ZdSpec{{3}}, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(zd_floquet_closed_form(ZdSpec{{3}}, 1, 1), std::invalid_argument);
}

TEST_CASE("the linear order equals the first invariant") {
    // One step above the period the invariant collapses to I_1.
    ZdSpec spec{{3, 4}};
    auto i1 = zd_periodic_closed_form(spec, 1);
    CHECK(zd_floquet_closed_form(spec, 0, 1) == i1);
    CHECK(zd_floquet_closed_form(spec, 1, 1) == i1);
}

TEST_CASE("invariant values at a potential") {
    ZdSpec spec{{2, 3}};
    std::mt19937_64 rng(4242);
    auto q = testsupport::random_potential(6, false, rng);
    auto g = build_zd(spec);
    auto t = invariant_table(g, 5);

    auto per = zd_periodic_invariants(spec, q);
    CHECK(per.i1 == evaluate(t.marginal(1), q));
    CHECK(per.i2 == evaluate(t.marginal(2), q));
    CHECK(per.i3 == evaluate(t.marginal(3), q));

    for (int axis = 0; axis < 2; ++axis) {
        auto fi = zd_floquet_invariants(spec, q, axis);
        int p = spec.periods[axis];
        CHECK(fi.linearOrder == p + 1);
        CHECK(fi.quadraticOrder == p + 2);
        IndexVector m(2, 0);
        m[axis] = 1;
        CHECK(fi.linear == evaluate(t.get(p + 1, m), q));
        CHECK(fi.quadratic == evaluate(t.get(p + 2, m), q));
    }
}

TEST_CASE("dft inverts and preserves energy") {
    ZdSpec spec{{3, 4}};
    std::mt19937_64 rng(99);
    auto q = testsupport::random_potential(12, true, rng);
    auto fp = dft(spec, q);
    REQUIRE(fp.values.size() == 12);

    auto back = inverse_dft(fp);
    double worst = 0;
    for (int v = 0; v < 12; ++v) {
        std::complex<double> orig(to_double(q.values[v].re), to_double(q.values[v].im));
        worst = std::max(worst, std::abs(back[v] - orig));
    }
    CHECK(worst < 1e-12);

    // Parseval: sum |Q|^2 = p * sum |hat Q|^2.
    double direct = 0, fourier = 0;
    for (int v = 0; v < 12; ++v) {
        std::complex<double> orig(to_double(q.values[v].re), to_double(q.values[v].im));
        direct += std::norm(orig);
    }
    for (const auto& z : fp.values) fourier += std::norm(z);
    CHECK(direct == doctest::Approx(12 * fourier).epsilon(1e-12));
}

TEST_CASE("fourier invariants agree with the exact values") {
    ZdSpec spec{{2, 3}};
    std::mt19937_64 rng(31);
    auto q = testsupport::random_potential(6, false, rng);

    auto fv = fourier_invariants(spec, q);
    auto per = zd_periodic_invariants(spec, q);

    CHECK(std::abs(fv.i1 - std::complex<double>(to_double(per.i1.re), to_double(per.i1.im))) <
          1e-12);
    REQUIRE(fv.i2.has_value());
    CHECK(*fv.i2 == doctest::Approx(to_double(per.i2.re)).epsilon(1e-12));
    REQUIRE(fv.quadratic.size() == 2);
    for (int axis = 0; axis < 2; ++axis) {
        auto fi = zd_floquet_invariants(spec, q, axis);
        REQUIRE(fv.quadratic[axis].has_value());
        CHECK(*fv.quadratic[axis] == doctest::Approx(to_double(fi.quadratic.re)).epsilon(1e-12));
    }
}

TEST_CASE("complex potentials keep the linear fourier identity only") {
    ZdSpec spec{{2, 2}};
    std::mt19937_64 rng(8);
    auto q = testsupport::random_potential(4, true, rng);
    auto fv = fourier_invariants(spec, q);
    CHECK(!fv.i2.has_value());
    for (const auto& v : fv.quadratic) CHECK(!v.has_value());
    auto per = zd_periodic_invariants(spec, q);
    CHECK(std::abs(fv.i1 - std::complex<double>(to_double(per.i1.re), to_double(per.i1.im))) <
          1e-12);
}

}  // TEST_SUITE
