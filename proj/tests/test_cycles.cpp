#include "perispec/builtins.hpp"
#include "perispec/cycles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace perispec;

namespace {

// Independent primality check: a rotation class is prime iff no proper
// rotation reproduces the sequence.
bool prime_by_rotations(const std::vector<int>& seq) {
    for (size_t s = 1; s < seq.size(); ++s) {
        bool same = true;
        for (size_t i = 0; i < seq.size() && same; ++i)
            same = seq[(i + s) % seq.size()] == seq[i];
        if (same) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("cycles") {

TEST_CASE("canonical rotation is the lexicographic minimum") {
    CHECK(canonical_rotation({3, 1, 2}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_rotation({2, 1, 2, 1}) == std::vector<int>{1, 2, 1, 2});
    CHECK(canonical_rotation({5}) == std::vector<int>{5});
    std::vector<int> seq = {4, 0, 2, 0, 3};
    auto canon = canonical_rotation(seq);
    for (size_t s = 0; s < seq.size(); ++s) {
        std::vector<int> rot(seq.size());
        for (size_t i = 0; i < seq.size(); ++i) rot[i] = seq[(i + s) % seq.size()];
        CHECK(!std::lexicographical_compare(rot.begin(), rot.end(), canon.begin(), canon.end()));
    }
}

TEST_CASE("minimal period and primality") {
    CHECK(minimal_period({1, 2, 1, 2}) == 2);
    CHECK(minimal_period({1, 2, 3}) == 3);
    CHECK(minimal_period({7}) == 1);
    CHECK(minimal_period({1, 1, 1}) == 1);
    CHECK(minimal_period({1, 2, 1, 2, 1, 2}) == 2);
}

TEST_CASE("make_cycle validates chaining and accumulates index and weight") {
    auto m = modified_graph(builtin_pendant());
    // Bond out, added loop at the pendant vertex, bond back: starts at vertex 0.
    auto c = make_cycle(m, {0, 5, 1});
    CHECK(c.edgeIds == std::vector<int>{0, 5, 1});
    CHECK(c.index == IndexVector{0});
    CHECK(c.weight == Monomial{0, 1});
    CHECK(c.has_added_loop());

    auto base = make_cycle(m, {2});
    CHECK(base.index == IndexVector{1});
    CHECK(!base.has_added_loop());

    CHECK_THROWS_AS(make_cycle(m, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(m, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycle(m, {}), std::invalid_argument);
}

TEST_CASE("reverse cycle negates the index") {
    auto m = modified_graph(builtin_kagome());
    auto c = make_cycle(m, {0, 2});  // two hops between vertices 0 and 1
    auto r = reverse_cycle(m, c);
    CHECK(r.index == negate(c.index));
    CHECK(r.weight == c.weight);
    CHECK(r.length() == c.length());
    auto rr = reverse_cycle(m, r);
    CHECK(rr.edgeIds == c.edgeIds);
}

TEST_CASE("prime decomposition") {
    auto m = modified_graph(builtin_pendant());
    auto doubled = make_cycle(m, {0, 1, 0, 1});
    auto dec = prime_decompose(m, doubled);
    CHECK(dec.multiplicity == 2);
    CHECK(dec.root.edgeIds == std::vector<int>{0, 1});
    CHECK(dec.root.index == IndexVector{0});

    auto prime = make_cycle(m, {0, 5, 1});
    auto dec2 = prime_decompose(m, prime);
    CHECK(dec2.multiplicity == 1);
    CHECK(dec2.root.edgeIds == prime.edgeIds);
}

TEST_CASE("pendant closed paths of length one") {
    auto m = modified_graph(builtin_pendant());
    auto paths = enumerate_closed_paths(m, 1);
    // Loop forward, loop backward, and one added loop per vertex.
    REQUIRE(paths.size() == 4);
    std::multiset<int> ids;
    for (const auto& p : paths) {
        REQUIRE(p.edgeIds.size() == 1);
        ids.insert(p.edgeIds[0]);
    }
    CHECK(ids == std::multiset<int>{2, 3, 4, 5});
}

TEST_CASE("closed path filters") {
    auto m = modified_graph(builtin_pendant());
    ClosedPathFilter onlyIndexOne;
    onlyIndexOne.index = IndexVector{1};
    auto paths = enumerate_closed_paths(m, 2, onlyIndexOne);
    for (const auto& p : paths) CHECK(p.index == IndexVector{1});
    // Length 2 with net index 1 needs the lattice loop plus an added loop.
    CHECK(paths.size() == 2);

    ClosedPathFilter baseOnly;
    baseOnly.forbidAddedLoop = true;
    for (const auto& p : enumerate_closed_paths(m, 2, baseOnly)) {
        for (int id : p.edgeIds) CHECK(!m.is_added_loop(id));
    }

    ClosedPathFilter needLoop;
    needLoop.requireAddedLoop = true;
    for (const auto& p : enumerate_closed_paths(m, 2, needLoop)) {
        CHECK(std::any_of(p.edgeIds.begin(), p.edgeIds.end(),
                          [&](int id) { return m.is_added_loop(id); }));
    }
}

TEST_CASE("closed paths are ordered and respect the length cap") {
    auto m = modified_graph(builtin_kagome());
    auto paths = enumerate_closed_paths(m, 3);
    for (size_t i = 1; i < paths.size(); ++i) {
        auto a = std::make_pair(paths[i - 1].start, paths[i - 1].edgeIds);
        auto b = std::make_pair(paths[i].start, paths[i].edgeIds);
        CHECK(a < b);
    }
    CHECK_THROWS_AS(enumerate_closed_paths(m, 13), std::invalid_argument);
    auto p = modified_graph(builtin_pendant());
    CHECK_THROWS_AS(enumerate_closed_paths(p, 3, {}, 2), std::invalid_argument);
    CHECK_NOTHROW(enumerate_closed_paths(p, 3, {}, 3));
}

TEST_CASE("prime cycle stream matches a brute-force rotation-class census") {
    auto m = modified_graph(builtin_kagome());
    const int maxLen = 4;

    std::set<std::vector<int>> expected;
    for (int n = 1; n <= maxLen; ++n) {
        for (const auto& p : enumerate_closed_paths(m, n)) {
            auto canon = canonical_rotation(p.edgeIds);
            if (prime_by_rotations(canon)) expected.insert(canon);
        }
    }

    std::set<std::vector<int>> streamed;
    for_each_prime_cycle(m, maxLen, CycleClass::WithAddedLoop, [&](const Cycle& c) {
        CHECK(c.edgeIds == canonical_rotation(c.edgeIds));
        CHECK(prime_by_rotations(c.edgeIds));
        CHECK(streamed.insert(c.edgeIds).second);  // no duplicates
    });
    // Base-only cycles complete the census.
    for_each_prime_cycle(m, maxLen, CycleClass::BaseOnly, [&](const Cycle& c) {
        CHECK(streamed.insert(c.edgeIds).second);
    });
    CHECK(streamed == expected);
}

TEST_CASE("prime cycles with index filter") {
    auto m = modified_graph(builtin_kagome());
    auto cycles = enumerate_prime_cycles(m, 2, CycleClass::BaseOnly, IndexVector{1, 0});
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].edgeIds == std::vector<int>{0, 2});
    CHECK(cycles[0].index == IndexVector{1, 0});
}

TEST_CASE("enumerated prime cycles are sorted by length then ids") {
    auto m = modified_graph(builtin_pendant());
    auto cycles = enumerate_prime_cycles(m, 4, CycleClass::WithAddedLoop);
    for (size_t i = 1; i < cycles.size(); ++i) {
        auto a = std::make_pair(cycles[i - 1].length(), cycles[i - 1].edgeIds);
        auto b = std::make_pair(cycles[i].length(), cycles[i].edgeIds);
        CHECK(a < b);
    }
    for (const auto& c : cycles) CHECK(c.has_added_loop());
}

TEST_CASE("rooted closed path count equals cycle length sum") {
    // Every closed path is a rotation of a power of exactly one prime cycle,
    // so per length n: #paths = sum over prime roots c with r|c| = n of |c|.
    auto m = modified_graph(builtin_kagome());
    for (int n = 1; n <= 5; ++n) {
        size_t total = enumerate_closed_paths(m, n).size();
        size_t predicted = 0;
        for_each_prime_cycle(m, n, CycleClass::WithAddedLoop, [&](const Cycle& c) {
            if (n % c.length() == 0) predicted += c.length();
        });
        for_each_prime_cycle(m, n, CycleClass::BaseOnly, [&](const Cycle& c) {
            if (n % c.length() == 0) predicted += c.length();
        });
        CHECK(total == predicted);
    }
}

}  // TEST_SUITE
