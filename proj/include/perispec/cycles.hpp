#pragma once

#include "perispec/graph.hpp"
#include "perispec/polynomial.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace perispec {

// Enumeration depth guard; invariant queries beyond this are refused rather
// than silently slow.
inline constexpr int kDefaultLengthCap = 12;

// Edge walk of fixed length that returns to its root. `weight` counts the
// added-loop visits per vertex, i.e. the exponent vector of its potential
// monomial.
struct ClosedPath {
    int start = -1;
    std::vector<int> edgeIds;
    IndexVector index;
    Monomial weight;

    int length() const { return static_cast<int>(edgeIds.size()); }
};

// Equivalence class of closed paths under cyclic rotation, represented by the
// lexicographically minimal rotation of the edge-id sequence.
struct Cycle {
    std::vector<int> edgeIds;
    IndexVector index;
    Monomial weight;

    int length() const { return static_cast<int>(edgeIds.size()); }
    bool has_added_loop() const {
        for (uint32_t e : weight)
            if (e) return true;
        return false;
    }
    friend bool operator==(const Cycle& a, const Cycle& b) { return a.edgeIds == b.edgeIds; }
};

struct PrimeDecomposition {
    Cycle root;
    int multiplicity = 1;
};

struct ClosedPathFilter {
    std::optional<IndexVector> index;
    bool requireAddedLoop = false;
    bool forbidAddedLoop = false;
};

// All closed paths of length exactly n, ordered by (start vertex, edge-id
// sequence). Index pruning is per coordinate against the largest |index_j|
// of any edge.
std::vector<ClosedPath> enumerate_closed_paths(const ModifiedFundamentalGraph& g, int n,
                                               const ClosedPathFilter& filter = {},
                                               int lengthCap = kDefaultLengthCap);

std::vector<int> canonical_rotation(const std::vector<int>& seq);

// Builds the cycle (canonical form, index, weight) of any closed edge-id
// sequence; validates tail/head chaining.
Cycle make_cycle(const ModifiedFundamentalGraph& g, const std::vector<int>& edgeIds);

Cycle reverse_cycle(const ModifiedFundamentalGraph& g, const Cycle& c);

// Smallest period of the edge-id sequence; a cycle is prime when that period
// is its full length.
int minimal_period(const std::vector<int>& seq);
bool is_prime(const Cycle& c);
PrimeDecomposition prime_decompose(const ModifiedFundamentalGraph& g, const Cycle& c);

enum class CycleClass {
    WithAddedLoop,  // prime cycles of the modified graph that use an added loop
    BaseOnly,       // prime cycles of the base graph
};

// Streams every prime cycle of length <= maxLen in the requested class exactly
// once (arbitrary order). The walk only extends edge sequences whose ids stay
// >= the first id, so each cycle surfaces as its canonical rotation alone and
// no dedup table is needed.
void for_each_prime_cycle(const ModifiedFundamentalGraph& g, int maxLen, CycleClass cls,
                          const std::function<void(const Cycle&)>& fn,
                          const std::optional<IndexVector>& indexFilter = {},
                          int lengthCap = kDefaultLengthCap);

// Collected and sorted by (length, edge-id sequence).
std::vector<Cycle> enumerate_prime_cycles(const ModifiedFundamentalGraph& g, int maxLen,
                                          CycleClass cls,
                                          const std::optional<IndexVector>& indexFilter = {},
                                          int lengthCap = kDefaultLengthCap);

}  // namespace perispec
