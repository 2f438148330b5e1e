#pragma once

#include "perispec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perispec {

// Quotient-lattice coordinates of an edge, one entry per period direction.
using IndexVector = std::vector<int>;

IndexVector negate(const IndexVector& v);
IndexVector add(const IndexVector& a, const IndexVector& b);
IndexVector scale(const IndexVector& v, int r);
bool is_zero(const IndexVector& v);
std::string index_to_string(const IndexVector& v);

// One orientation of an edge. A declaration `edge u v m...` yields ids 2j
// (as written) and 2j+1 (the reverse, with negated index); `pair` is j for
// both. Added diagonal loops of the modified graph reuse this struct with
// reverse == id.
struct OrientedEdge {
    int id = -1;
    int pair = -1;
    int tail = -1;
    int head = -1;
    IndexVector index;
    int reverse = -1;
};

struct FundamentalGraph {
    int dim = 0;
    int numVertices = 0;
    std::vector<OrientedEdge> edges;      // size 2 * declarations
    std::vector<std::vector<int>> out;    // per tail vertex, edge ids ascending

    int degree(int v) const { return static_cast<int>(out[v].size()); }
    int numDeclarations() const { return static_cast<int>(edges.size()) / 2; }

    friend bool operator==(const FundamentalGraph& a, const FundamentalGraph& b);
};

// Per-coordinate max |index_j| over all edges; zero vector for an edgeless graph.
IndexVector max_abs_index(const FundamentalGraph& g);

// Potential as a dense vector over vertex ids; unspecified vertices are 0.
struct Potential {
    std::vector<ComplexRational> values;

    bool is_real() const {
        for (const auto& v : values)
            if (!v.is_real()) return false;
        return true;
    }
};

// Base graph plus one zero-index diagonal loop per vertex. Loop for vertex v
// gets id numBaseEdges + v and carries the weight q_v; base edges weigh 1.
struct ModifiedFundamentalGraph {
    FundamentalGraph base;
    std::vector<OrientedEdge> edges;      // base edges then added loops
    std::vector<std::vector<int>> out;
    int numBaseEdges = 0;

    bool is_added_loop(int edgeId) const { return edgeId >= numBaseEdges; }
    int loop_vertex(int edgeId) const { return edgeId - numBaseEdges; }
};

ModifiedFundamentalGraph modified_graph(const FundamentalGraph& g);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int lineNo, const std::string& what)
        : std::runtime_error("line " + std::to_string(lineNo) + ": " + what), line(lineNo) {}
};

// Text format, one directive per line, `#` starts a comment:
//   dim D
//   vertices N
//   edge U V M1 .. MD     (unoriented; reverse orientation is implied)
//   potential V RE [IM]   (rational literals, e.g. -3/4)
// Loops with all-zero index are rejected outright. Parallel edges are kept
// distinct in declaration order.
struct GraphFile {
    FundamentalGraph graph;
    std::optional<Potential> potential;
};

GraphFile parse_graph(const std::string& text);

// Potential-only file: `vertices N` plus `potential` lines.
Potential parse_potential(const std::string& text, int expectedVertices = -1);

// Canonical round-trippable text: dim, vertices, edges in declaration order.
std::string serialize_graph(const FundamentalGraph& g);
std::string serialize_potential(const Potential& q);

// Throws std::invalid_argument if the graph is empty or not connected (in the
// undirected sense).
void validate_graph(const FundamentalGraph& g);

// The spectral results need the edge indices to generate all of Z^dim; cycles
// of the quotient only realize indices inside the sublattice they span. The
// diagnostic reports that sublattice so thin inputs fail loudly instead of
// producing tables that are silently zero off a hyperplane.
struct IndexLatticeDiagnostic {
    int rank = 0;
    bool fullRank = false;
    long long latticeIndex = 0;  // [Z^dim : L] when full rank, else 0
    bool fullLattice = false;    // rank == dim and index == 1
    std::string message;
};

IndexLatticeDiagnostic validate_full_rank(const FundamentalGraph& g);

}  // namespace perispec
