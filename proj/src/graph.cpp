#include "perispec/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

namespace perispec {

IndexVector negate(const IndexVector& v) {
    IndexVector r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IndexVector add(const IndexVector& a, const IndexVector& b) {
    IndexVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IndexVector scale(const IndexVector& v, int r) {
    IndexVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = r * v[i];
    return out;
}

bool is_zero(const IndexVector& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string index_to_string(const IndexVector& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

bool operator==(const FundamentalGraph& a, const FundamentalGraph& b) {
    if (a.dim != b.dim || a.numVertices != b.numVertices || a.edges.size() != b.edges.size())
        return false;
    for (size_t i = 0; i < a.edges.size(); ++i) {
        const auto& x = a.edges[i];
        const auto& y = b.edges[i];
        if (x.tail != y.tail || x.head != y.head || x.index != y.index) return false;
    }
    return true;
}

IndexVector max_abs_index(const FundamentalGraph& g) {
    IndexVector m(g.dim, 0);
    for (const auto& e : g.edges)
        for (int j = 0; j < g.dim; ++j) m[j] = std::max(m[j], std::abs(e.index[j]));
    return m;
}

ModifiedFundamentalGraph modified_graph(const FundamentalGraph& g) {
    ModifiedFundamentalGraph m;
    m.base = g;
    m.numBaseEdges = static_cast<int>(g.edges.size());
    m.edges = g.edges;
    m.out = g.out;
    for (int v = 0; v < g.numVertices; ++v) {
        OrientedEdge loop;
        loop.id = m.numBaseEdges + v;
        loop.pair = g.numDeclarations() + v;
        loop.tail = loop.head = v;
        loop.index = IndexVector(g.dim, 0);
        loop.reverse = loop.id;
        m.edges.push_back(loop);
        m.out[v].push_back(loop.id);  // loop ids exceed all base ids, order stays ascending
    }
    return m;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("bad ") + what + " '" + tok + "'");
    }
}

ComplexRational parse_potential_value(const Line& line, size_t from) {
    try {
        Rational re = parse_rational(line.tokens[from]);
        Rational im = line.tokens.size() > from + 1 ? parse_rational(line.tokens[from + 1])
                                                    : Rational(0);
        return {re, im};
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

void add_declaration(FundamentalGraph& g, int u, int v, IndexVector index) {
    int j = g.numDeclarations();
    OrientedEdge fwd;
    fwd.id = 2 * j;
    fwd.pair = j;
    fwd.tail = u;
    fwd.head = v;
    fwd.index = std::move(index);
    fwd.reverse = 2 * j + 1;

    OrientedEdge rev;
    rev.id = 2 * j + 1;
    rev.pair = j;
    rev.tail = v;
    rev.head = u;
    rev.index = negate(fwd.index);
    rev.reverse = 2 * j;

    g.out[u].push_back(fwd.id);
    g.out[v].push_back(rev.id);
    g.edges.push_back(std::move(fwd));
    g.edges.push_back(std::move(rev));
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    GraphFile file;
    FundamentalGraph& g = file.graph;
    int dim = -1, vertices = -1;
    bool hasPotential = false;
    std::vector<bool> potentialSeen;
    Potential pot;

    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "dim") {
            if (dim >= 0) throw ParseError(line.number, "duplicate dim directive");
            if (t.size() != 2) throw ParseError(line.number, "expected: dim D");
            dim = parse_int(line, t[1], "dimension");
            if (dim < 1) throw ParseError(line.number, "dimension must be >= 1");
        } else if (t[0] == "vertices") {
            if (vertices >= 0) throw ParseError(line.number, "duplicate vertices directive");
            if (t.size() != 2) throw ParseError(line.number, "expected: vertices N");
            vertices = parse_int(line, t[1], "vertex count");
            if (vertices < 1) throw ParseError(line.number, "vertex count must be >= 1");
            g.out.assign(vertices, {});
            potentialSeen.assign(vertices, false);
            pot.values.assign(vertices, ComplexRational{});
        } else if (t[0] == "edge") {
            if (dim < 0) throw ParseError(line.number, "edge before dim directive");
            if (vertices < 0) throw ParseError(line.number, "edge before vertices directive");
            if (static_cast<int>(t.size()) != 3 + dim)
                throw ParseError(line.number, "edge needs 2 endpoints and " +
                                                  std::to_string(dim) + " index entries");
            int u = parse_int(line, t[1], "vertex id");
            int v = parse_int(line, t[2], "vertex id");
            if (u < 0 || u >= vertices || v < 0 || v >= vertices)
                throw ParseError(line.number, "vertex id out of range");
            IndexVector index(dim);
            for (int j = 0; j < dim; ++j) index[j] = parse_int(line, t[3 + j], "index entry");
            if (u == v && is_zero(index))
                throw ParseError(line.number, "loop with zero index is not allowed");
            add_declaration(g, u, v, std::move(index));
        } else if (t[0] == "potential") {
            if (vertices < 0) throw ParseError(line.number, "potential before vertices directive");
            if (t.size() != 3 && t.size() != 4)
                throw ParseError(line.number, "expected: potential V RE [IM]");
            int v = parse_int(line, t[1], "vertex id");
            if (v < 0 || v >= vertices) throw ParseError(line.number, "vertex id out of range");
            if (potentialSeen[v])
                throw ParseError(line.number, "duplicate potential for vertex " + std::to_string(v));
            potentialSeen[v] = true;
            pot.values[v] = parse_potential_value(line, 2);
            hasPotential = true;
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }

    if (dim < 0) throw ParseError(0, "missing dim directive");
    if (vertices < 0) throw ParseError(0, "missing vertices directive");
    g.dim = dim;
    g.numVertices = vertices;
    if (hasPotential) file.potential = std::move(pot);
    return file;
}

Potential parse_potential(const std::string& text, int expectedVertices) {
    int vertices = -1;
    Potential pot;
    std::vector<bool> seen;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "vertices") {
            if (vertices >= 0) throw ParseError(line.number, "duplicate vertices directive");
            if (t.size() != 2) throw ParseError(line.number, "expected: vertices N");
            vertices = parse_int(line, t[1], "vertex count");
            if (vertices < 1) throw ParseError(line.number, "vertex count must be >= 1");
            pot.values.assign(vertices, ComplexRational{});
            seen.assign(vertices, false);
        } else if (t[0] == "potential") {
            if (vertices < 0) throw ParseError(line.number, "potential before vertices directive");
            if (t.size() != 3 && t.size() != 4)
                throw ParseError(line.number, "expected: potential V RE [IM]");
            int v = parse_int(line, t[1], "vertex id");
            if (v < 0 || v >= vertices) throw ParseError(line.number, "vertex id out of range");
            if (seen[v])
                throw ParseError(line.number, "duplicate potential for vertex " + std::to_string(v));
            seen[v] = true;
            pot.values[v] = parse_potential_value(line, 2);
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "' in potential file");
        }
    }
    if (vertices < 0) throw ParseError(0, "missing vertices directive");
    if (expectedVertices >= 0 && vertices != expectedVertices)
        throw std::invalid_argument("potential file declares " + std::to_string(vertices) +
                                    " vertices, graph has " + std::to_string(expectedVertices));
    return pot;
}

std::string serialize_graph(const FundamentalGraph& g) {
    std::ostringstream out;
    out << "dim " << g.dim << "\n";
    out << "vertices " << g.numVertices << "\n";
    for (int j = 0; j < g.numDeclarations(); ++j) {
        const OrientedEdge& e = g.edges[2 * j];
        out << "edge " << e.tail << " " << e.head;
        for (int x : e.index) out << " " << x;
        out << "\n";
    }
    return out.str();
}

std::string serialize_potential(const Potential& q) {
    std::ostringstream out;
    out << "vertices " << q.values.size() << "\n";
    for (size_t v = 0; v < q.values.size(); ++v) {
        const ComplexRational& z = q.values[v];
        out << "potential " << v << " " << rational_to_string(z.re);
        if (z.im != 0) out << " " << rational_to_string(z.im);
        out << "\n";
    }
    return out.str();
}

void validate_graph(const FundamentalGraph& g) {
    if (g.numVertices < 1) throw std::invalid_argument("graph has no vertices");
    std::vector<bool> reached(g.numVertices, false);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = true;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int id : g.out[v]) {
            int u = g.edges[id].head;
            if (!reached[u]) {
                reached[u] = true;
                frontier.push(u);
            }
        }
    }
    if (!std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }))
        throw std::invalid_argument("graph is not connected");
}

IndexLatticeDiagnostic validate_full_rank(const FundamentalGraph& g) {
    const int d = g.dim;

    // Spanning forest; theta(v) accumulates tree-edge indices from the root.
    std::vector<IndexVector> theta(g.numVertices, IndexVector(d, 0));
    std::vector<bool> reached(g.numVertices, false);
    std::vector<bool> treePair(g.numDeclarations(), false);
    for (int root = 0; root < g.numVertices; ++root) {
        if (reached[root]) continue;
        reached[root] = true;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int id : g.out[v]) {
                const OrientedEdge& e = g.edges[id];
                if (reached[e.head]) continue;
                reached[e.head] = true;
                treePair[e.pair] = true;
                theta[e.head] = add(theta[v], e.index);
                frontier.push(e.head);
            }
        }
    }

    // Every non-tree declaration closes one independent cycle; its total index
    // is a lattice generator.
    std::vector<std::vector<long long>> rows;
    for (int j = 0; j < g.numDeclarations(); ++j) {
        if (treePair[j]) continue;
        const OrientedEdge& e = g.edges[2 * j];
        IndexVector gen = add(add(theta[e.tail], e.index), negate(theta[e.head]));
        if (is_zero(gen)) continue;
        rows.emplace_back(gen.begin(), gen.end());
    }

    // Integer row echelon via repeated Euclid steps per pivot column.
    IndexLatticeDiagnostic diag;
    int pivotRow = 0;
    std::vector<long long> pivots;
    for (int col = 0; col < d && pivotRow < static_cast<int>(rows.size()); ++col) {
        while (true) {
            int best = -1;
            for (int r = pivotRow; r < static_cast<int>(rows.size()); ++r) {
                if (rows[r][col] == 0) continue;
                if (best < 0 || std::llabs(rows[r][col]) < std::llabs(rows[best][col])) best = r;
            }
            if (best < 0) break;
            std::swap(rows[pivotRow], rows[best]);
            bool reducedAll = true;
            for (int r = pivotRow + 1; r < static_cast<int>(rows.size()); ++r) {
                if (rows[r][col] == 0) continue;
                long long q = rows[r][col] / rows[pivotRow][col];
                for (int c = 0; c < d; ++c) rows[r][c] -= q * rows[pivotRow][c];
                if (rows[r][col] != 0) reducedAll = false;
            }
            if (reducedAll) break;
        }
        if (rows[pivotRow][col] != 0) {
            pivots.push_back(std::llabs(rows[pivotRow][col]));
            ++pivotRow;
        }
    }

    diag.rank = pivotRow;
    diag.fullRank = (diag.rank == d);
    if (diag.fullRank) {
        long long idx = 1;
        for (long long p : pivots) idx *= p;
        diag.latticeIndex = idx;
        diag.fullLattice = (idx == 1);
    }
    if (diag.fullLattice) {
        diag.message = "edge indices generate Z^" + std::to_string(d);
    } else if (diag.fullRank) {
        diag.message = "edge indices generate a full-rank sublattice of index " +
                       std::to_string(diag.latticeIndex) + " in Z^" + std::to_string(d);
    } else {
        diag.message = "edge indices only span a rank-" + std::to_string(diag.rank) +
                       " sublattice of Z^" + std::to_string(d);
    }
    return diag;
}

}  // namespace perispec
