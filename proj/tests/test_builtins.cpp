#include "perispec/builtins.hpp"
#include "perispec/graph.hpp"

#include <doctest.h>

using namespace perispec;

TEST_SUITE("builtins") {

TEST_CASE("cycle graph shape") {
    for (int nu = 1; nu <= 6; ++nu) {
        auto g = builtin_cycle(nu);
        CHECK(g.dim == 1);
        CHECK(g.numVertices == nu);
        CHECK(g.numDeclarations() == nu);
        for (int v = 0; v < nu; ++v) CHECK(g.degree(v) == 2);
        int wraps = 0;
        for (int j = 0; j < g.numDeclarations(); ++j)
            if (!is_zero(g.edges[2 * j].index)) ++wraps;
        CHECK(wraps == 1);
        validate_graph(g);
        CHECK(validate_full_rank(g).fullLattice);
    }
    CHECK_THROWS_AS(builtin_cycle(0), std::invalid_argument);
}

TEST_CASE("single vertex ring is the integer line") {
    auto g = builtin_cycle(1);
    CHECK(g.numVertices == 1);
    CHECK(g.numDeclarations() == 1);
    CHECK(g.edges[0].tail == 0);
    CHECK(g.edges[0].head == 0);
    CHECK(g.edges[0].index == IndexVector{1});
}

TEST_CASE("pendant graph shape") {
    auto g = builtin_pendant();
    CHECK(g.dim == 1);
    CHECK(g.numVertices == 2);
    CHECK(g.numDeclarations() == 2);
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 1);
    CHECK(g.edges[2].tail == 0);
    CHECK(g.edges[2].head == 0);
    CHECK(g.edges[2].index == IndexVector{1});
}

TEST_CASE("kagome graph shape") {
    auto g = builtin_kagome();
    CHECK(g.dim == 2);
    CHECK(g.numVertices == 3);
    CHECK(g.numDeclarations() == 6);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 4);
    // Two parallel routes between each vertex pair.
    int between[3][3] = {};
    for (int j = 0; j < 6; ++j) {
        const auto& e = g.edges[2 * j];
        ++between[e.tail][e.head];
        ++between[e.head][e.tail];
    }
    CHECK(between[0][1] == 2);
    CHECK(between[0][2] == 2);
    CHECK(between[1][2] == 2);
    validate_graph(g);
    CHECK(validate_full_rank(g).fullLattice);
}

TEST_CASE("token parsing") {
    REQUIRE(parse_builtin_token("pendant").has_value());
    CHECK(*parse_builtin_token("pendant") == builtin_pendant());
    CHECK(*parse_builtin_token("kagome") == builtin_kagome());
    CHECK(*parse_builtin_token("cycle:5") == builtin_cycle(5));
    CHECK(*parse_builtin_token("zd:2,3") == build_zd(ZdSpec{{2, 3}}));

    CHECK(!parse_builtin_token("nosuch").has_value());
    CHECK(!parse_builtin_token("graph.txt").has_value());
    CHECK(!parse_builtin_token("").has_value());

    CHECK_THROWS_AS(parse_builtin_token("cycle:abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin_token("cycle:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin_token("cycle:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin_token("zd:1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_builtin_token("pendant:3"), std::invalid_argument);
}

TEST_CASE("argument list form") {
    CHECK(build_builtin({"pendant"}) == builtin_pendant());
    CHECK(build_builtin({"cycle", "4"}) == builtin_cycle(4));
    CHECK(build_builtin({"zd", "3,3"}) == build_zd(ZdSpec{{3, 3}}));
    CHECK_THROWS_AS(build_builtin({"nosuch"}), std::invalid_argument);
    CHECK_THROWS_AS(build_builtin({}), std::invalid_argument);
}

TEST_CASE("builtins survive a serialize parse round trip") {
    for (const auto& g : {builtin_pendant(), builtin_kagome(), builtin_cycle(3),
                          build_zd(ZdSpec{{2, 3}})}) {
        auto text = serialize_graph(g);
        CHECK(parse_graph(text).graph == g);
    }
}

}  // TEST_SUITE
