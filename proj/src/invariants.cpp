#include "perispec/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace perispec {

namespace {

Monomial scaled(const Monomial& w, int r) {
    Monomial out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[i] = w[i] * static_cast<uint32_t>(r);
    return out;
}

void check_order(int n, int lengthCap) {
    if (n < 1) throw std::invalid_argument("invariant order must be >= 1");
    if (n > lengthCap)
        throw std::invalid_argument("invariant order " + std::to_string(n) +
                                    " exceeds length cap " + std::to_string(lengthCap));
}

// Vertex potentials along the cycle, one polynomial per step.
std::vector<PotentialPolynomial> cycle_vertex_vars(const FundamentalGraph& g,
                                                   const ModifiedFundamentalGraph& mod,
                                                   const Cycle& c) {
    std::vector<PotentialPolynomial> vars;
    vars.reserve(c.edgeIds.size());
    for (int id : c.edgeIds)
        vars.push_back(PotentialPolynomial::variable(g.numVertices, mod.edges[id].tail));
    return vars;
}

}  // namespace

IndexVector InvariantTable::box_radius(int n) const {
    return scale(maxAbsIndex, n - 1);
}

bool InvariantTable::in_box(int n, const IndexVector& m) const {
    IndexVector radius = box_radius(n);
    for (int j = 0; j < dim; ++j)
        if (std::abs(m[j]) > radius[j]) return false;
    return true;
}

PotentialPolynomial InvariantTable::get(int n, const IndexVector& m) const {
    if (n < 1 || n > nuMax) throw std::out_of_range("invariant order outside table range");
    if (static_cast<int>(m.size()) != dim)
        throw std::invalid_argument("quasimomentum index arity mismatch");
    auto it = entries.find({n, m});
    return it != entries.end() ? it->second : PotentialPolynomial(numVertices);
}

const PotentialPolynomial& InvariantTable::marginal(int n) const {
    auto it = marginals.find(n);
    if (it == marginals.end()) throw std::out_of_range("invariant order outside table range");
    return it->second;
}

PotentialPolynomial invariant_floquet(const FundamentalGraph& g, int n, const IndexVector& m,
                                      int lengthCap) {
    check_order(n, lengthCap);
    if (static_cast<int>(m.size()) != g.dim)
        throw std::invalid_argument("quasimomentum index arity mismatch");
    ModifiedFundamentalGraph mod = modified_graph(g);
    PotentialPolynomial sum(g.numVertices);
    for_each_prime_cycle(
        mod, n, CycleClass::WithAddedLoop,
        [&](const Cycle& c) {
            if (n % c.length() != 0) return;
            int r = n / c.length();
            if (scale(c.index, r) != m) return;
            sum.add_term(scaled(c.weight, r), Rational(1, r));
        },
        std::nullopt, lengthCap);
    return sum;
}

PotentialPolynomial invariant_periodic(const FundamentalGraph& g, int n, int lengthCap) {
    check_order(n, lengthCap);
    ModifiedFundamentalGraph mod = modified_graph(g);
    PotentialPolynomial sum(g.numVertices);
    for_each_prime_cycle(
        mod, n, CycleClass::WithAddedLoop,
        [&](const Cycle& c) {
            if (n % c.length() != 0) return;
            int r = n / c.length();
            sum.add_term(scaled(c.weight, r), Rational(1, r));
        },
        std::nullopt, lengthCap);
    return sum;
}

InvariantTable invariant_table(const FundamentalGraph& g, int nuMax, int lengthCap) {
    check_order(nuMax, lengthCap);
    InvariantTable table;
    table.numVertices = g.numVertices;
    table.dim = g.dim;
    table.nuMax = nuMax;
    table.maxAbsIndex = max_abs_index(g);

    for (int n = 1; n <= nuMax; ++n) {
        table.marginals.emplace(n, PotentialPolynomial(g.numVertices));
        IndexVector radius = table.box_radius(n);
        IndexVector m(g.dim);
        // Odometer over the box, lex order.
        for (int j = 0; j < g.dim; ++j) m[j] = -radius[j];
        while (true) {
            table.entries.emplace(std::make_pair(n, m), PotentialPolynomial(g.numVertices));
            int j = g.dim - 1;
            while (j >= 0 && m[j] == radius[j]) {
                m[j] = -radius[j];
                --j;
            }
            if (j < 0) break;
            ++m[j];
        }
    }

    ModifiedFundamentalGraph mod = modified_graph(g);
    for_each_prime_cycle(
        mod, nuMax, CycleClass::WithAddedLoop,
        [&](const Cycle& c) {
            for (int r = 1; r * c.length() <= nuMax; ++r) {
                int n = r * c.length();
                IndexVector m = scale(c.index, r);
                auto cell = table.entries.find({n, m});
                if (cell == table.entries.end())
                    throw std::logic_error("cycle index escaped the support box");
                cell->second.add_term(scaled(c.weight, r), Rational(1, r));
                table.marginals.at(n).add_term(scaled(c.weight, r), Rational(1, r));
            }
        },
        std::nullopt, lengthCap);
    return table;
}

namespace {

// 2-cycles of the base graph as ordered id pairs (a < b). Each prime 2-cycle
// appears exactly once.
std::vector<std::pair<int, int>> base_two_cycles(const FundamentalGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < static_cast<int>(g.edges.size()); ++a) {
        const OrientedEdge& e = g.edges[a];
        for (int b : g.out[e.head]) {
            if (b <= a) continue;
            if (g.edges[b].head == e.tail) out.emplace_back(a, b);
        }
    }
    return out;
}

bool all_even(const IndexVector& m) {
    return std::all_of(m.begin(), m.end(), [](int x) { return x % 2 == 0; });
}

IndexVector halved(const IndexVector& m) {
    IndexVector h(m.size());
    for (size_t j = 0; j < m.size(); ++j) h[j] = m[j] / 2;
    return h;
}

PotentialPolynomial power_sum(const FundamentalGraph& g, unsigned e, const Rational& c) {
    PotentialPolynomial p(g.numVertices);
    for (int v = 0; v < g.numVertices; ++v) {
        Monomial mono(g.numVertices, 0);
        mono[v] = e;
        p.add_term(mono, c);
    }
    return p;
}

PotentialPolynomial pair_vertex_sum(const FundamentalGraph& g, int a, int b) {
    PotentialPolynomial p =
        PotentialPolynomial::variable(g.numVertices, g.edges[a].tail);
    p += PotentialPolynomial::variable(g.numVertices, g.edges[b].tail);
    return p;
}

}  // namespace

PotentialPolynomial closed_form_floquet(const FundamentalGraph& g, int n, const IndexVector& m) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("closed forms cover invariant orders 1..3");
    if (static_cast<int>(m.size()) != g.dim)
        throw std::invalid_argument("quasimomentum index arity mismatch");

    const bool mZero = is_zero(m);
    PotentialPolynomial out(g.numVertices);

    if (n == 1) return mZero ? power_sum(g, 1, Rational(1)) : out;

    if (n == 2) {
        if (mZero) return power_sum(g, 2, Rational(1, 2));
        for (const OrientedEdge& e : g.edges)
            if (e.tail == e.head && e.index == m)
                out += PotentialPolynomial::variable(g.numVertices, e.tail);
        return out;
    }

    auto twoCycles = base_two_cycles(g);
    if (mZero) {
        out = power_sum(g, 3, Rational(1, 3));
        for (auto [a, b] : twoCycles)
            if (is_zero(add(g.edges[a].index, g.edges[b].index)))
                out += pair_vertex_sum(g, a, b);
        return out;
    }
    for (const OrientedEdge& e : g.edges)
        if (e.tail == e.head && e.index == m)
            out += PotentialPolynomial::variable(g.numVertices, e.tail).pow(2);
    if (all_even(m)) {
        IndexVector half = halved(m);
        for (const OrientedEdge& e : g.edges)
            if (e.tail == e.head && e.index == half)
                out += PotentialPolynomial::variable(g.numVertices, e.tail);
    }
    for (auto [a, b] : twoCycles)
        if (add(g.edges[a].index, g.edges[b].index) == m) out += pair_vertex_sum(g, a, b);
    return out;
}

PotentialPolynomial closed_form_periodic(const FundamentalGraph& g, int n) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("closed forms cover invariant orders 1..3");

    if (n == 1) return power_sum(g, 1, Rational(1));

    if (n == 2) {
        PotentialPolynomial out = power_sum(g, 2, Rational(1, 2));
        for (const OrientedEdge& e : g.edges)
            if (e.tail == e.head) out += PotentialPolynomial::variable(g.numVertices, e.tail);
        return out;
    }

    PotentialPolynomial out = power_sum(g, 3, Rational(1, 3));
    for (const OrientedEdge& e : g.edges) {
        if (e.tail != e.head) continue;
        PotentialPolynomial qv = PotentialPolynomial::variable(g.numVertices, e.tail);
        out += qv.pow(2);
        out += qv;
    }
    for (auto [a, b] : base_two_cycles(g)) out += pair_vertex_sum(g, a, b);
    return out;
}

PotentialPolynomial symmetric_h(int s, const std::vector<PotentialPolynomial>& args) {
    if (args.empty()) throw std::invalid_argument("symmetric_h needs at least one argument");
    int numVars = args.front().num_vars();
    PotentialPolynomial out(numVars);
    if (s == 1) {
        for (const auto& a : args) out += a;
        return out;
    }
    if (s == 2) {
        for (size_t j = 0; j < args.size(); ++j)
            for (size_t l = j; l < args.size(); ++l) out += args[j] * args[l];
        return out;
    }
    throw std::invalid_argument("symmetric_h implemented for s in {1,2}");
}

bool periodic_graph_bipartite(const FundamentalGraph& g) {
    const int unknowns = g.numVertices + g.dim;
    std::vector<std::vector<uint8_t>> rows;  // coefficients + augmented bit
    for (int j = 0; j < g.numDeclarations(); ++j) {
        const OrientedEdge& e = g.edges[2 * j];
        std::vector<uint8_t> row(unknowns + 1, 0);
        row[e.tail] ^= 1;
        row[e.head] ^= 1;
        for (int t = 0; t < g.dim; ++t)
            if (e.index[t] % 2 != 0) row[g.numVertices + t] ^= 1;
        row[unknowns] = 1;
        rows.push_back(std::move(row));
    }

    int pivotRow = 0;
    for (int col = 0; col < unknowns && pivotRow < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = pivotRow; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col]) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[pivotRow], rows[found]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivotRow || !rows[r][col]) continue;
            for (int c = col; c <= unknowns; ++c) rows[r][c] ^= rows[pivotRow][c];
        }
        ++pivotRow;
    }
    for (const auto& row : rows) {
        bool allZero = std::all_of(row.begin(), row.end() - 1, [](uint8_t b) { return b == 0; });
        if (allZero && row.back()) return false;
    }
    return true;
}

LinearQuadraticResult linear_quadratic_invariants(const FundamentalGraph& g, const IndexVector& m,
                                                  int lengthCap) {
    if (static_cast<int>(m.size()) != g.dim)
        throw std::invalid_argument("quasimomentum index arity mismatch");
    int content = 0;
    for (int x : m) content = std::gcd(content, std::abs(x));
    if (content != 1)
        throw std::invalid_argument("index " + index_to_string(m) + " is not primitive");

    ModifiedFundamentalGraph mod = modified_graph(g);

    LinearQuadraticResult res;
    res.m = m;
    res.bipartite = periodic_graph_bipartite(g);

    int shortest = -1;
    for (int n = 1; n + 1 <= lengthCap && shortest < 0; ++n) {
        ClosedPathFilter f;
        f.index = m;
        f.forbidAddedLoop = true;
        if (!enumerate_closed_paths(mod, n, f, lengthCap).empty()) shortest = n;
    }
    if (shortest < 0)
        throw std::invalid_argument("no cycle with index " + index_to_string(m) +
                                    " of length <= " + std::to_string(lengthCap - 1));
    res.shortestLength = shortest;

    std::vector<Cycle> shortCycles =
        enumerate_prime_cycles(mod, shortest + 1, CycleClass::BaseOnly, m, lengthCap);

    res.linear = PotentialPolynomial(g.numVertices);
    res.quadratic = PotentialPolynomial(g.numVertices);
    for (const Cycle& c : shortCycles) {
        auto vars = cycle_vertex_vars(g, mod, c);
        if (c.length() == shortest) {
            ++res.numShortest;
            res.linear += symmetric_h(1, vars);
            res.quadratic += symmetric_h(2, vars);
        } else {
            ++res.numShortestPlusOne;
            res.quadratic += symmetric_h(1, vars);
        }
    }
    if (res.bipartite && res.numShortestPlusOne != 0)
        throw std::logic_error("bipartite graph produced cycles of both parities for index " +
                               index_to_string(m));
    return res;
}

ComplexRational evaluate(const PotentialPolynomial& p, const Potential& q) {
    return p.evaluate(q.values);
}

}  // namespace perispec
