#include "perispec/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace perispec {

namespace {

void check_depth(int n, int lengthCap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
    if (n > lengthCap)
        throw std::invalid_argument(std::string(what) + " " + std::to_string(n) +
                                    " exceeds length cap " + std::to_string(lengthCap));
}

void check_filter_dim(const std::optional<IndexVector>& f, int dim) {
    if (f && static_cast<int>(f->size()) != dim)
        throw std::invalid_argument("index filter arity does not match graph dimension");
}

// True when no continuation of `partial` by `remaining` more edges can reach
// `target` (per-coordinate bound by the largest edge index).
bool index_unreachable(const IndexVector& partial, const IndexVector& target,
                       const IndexVector& maxAbs, int remaining) {
    for (size_t j = 0; j < target.size(); ++j)
        if (std::abs(target[j] - partial[j]) > remaining * maxAbs[j]) return true;
    return false;
}

struct PathDfs {
    const ModifiedFundamentalGraph& g;
    int n;
    const ClosedPathFilter& filter;
    IndexVector maxAbs;
    std::vector<ClosedPath>* out;

    int start = -1;
    std::vector<int> ids;
    IndexVector partial;
    Monomial weight;
    int loopsUsed = 0;

    void run(int v, int depth) {
        if (depth == n) {
            if (v != start) return;
            if (filter.requireAddedLoop && loopsUsed == 0) return;
            if (filter.index && partial != *filter.index) return;
            out->push_back({start, ids, partial, weight});
            return;
        }
        for (int id : g.out[v]) {
            const OrientedEdge& e = g.edges[id];
            bool loop = g.is_added_loop(id);
            if (loop && filter.forbidAddedLoop) continue;
            for (size_t j = 0; j < partial.size(); ++j) partial[j] += e.index[j];
            if (!filter.index ||
                !index_unreachable(partial, *filter.index, maxAbs, n - depth - 1)) {
                ids.push_back(id);
                if (loop) {
                    ++weight[e.tail];
                    ++loopsUsed;
                }
                run(e.head, depth + 1);
                if (loop) {
                    --weight[e.tail];
                    --loopsUsed;
                }
                ids.pop_back();
            }
            for (size_t j = 0; j < partial.size(); ++j) partial[j] -= e.index[j];
        }
    }
};

bool is_minimal_rotation(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    for (int p = 1; p < n; ++p) {
        for (int i = 0; i < n; ++i) {
            int a = s[(p + i) % n];
            int b = s[i];
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    }
    return true;
}

struct CycleDfs {
    const ModifiedFundamentalGraph& g;
    int maxLen;
    CycleClass cls;
    const std::optional<IndexVector>* indexFilter;
    IndexVector maxAbs;
    const std::function<void(const Cycle&)>* fn;

    int start = -1;
    int minId = 0;
    std::vector<int> ids;
    IndexVector partial;
    Monomial weight;
    int loopsUsed = 0;

    void emit_if_cycle(int depth) {
        if (cls == CycleClass::WithAddedLoop && loopsUsed == 0) return;
        if (*indexFilter && partial != **indexFilter) return;
        if (!is_minimal_rotation(ids)) return;
        if (minimal_period(ids) != depth) return;
        (*fn)(Cycle{ids, partial, weight});
    }

    void run(int v, int depth) {
        if (v == start && depth > 0) emit_if_cycle(depth);
        if (depth == maxLen) return;
        for (int id : g.out[v]) {
            if (id < minId) continue;
            const OrientedEdge& e = g.edges[id];
            bool loop = g.is_added_loop(id);
            if (loop && cls == CycleClass::BaseOnly) continue;
            for (size_t j = 0; j < partial.size(); ++j) partial[j] += e.index[j];
            if (!*indexFilter ||
                !index_unreachable(partial, **indexFilter, maxAbs, maxLen - depth - 1)) {
                ids.push_back(id);
                if (loop) {
                    ++weight[e.tail];
                    ++loopsUsed;
                }
                run(e.head, depth + 1);
                if (loop) {
                    --weight[e.tail];
                    --loopsUsed;
                }
                ids.pop_back();
            }
            for (size_t j = 0; j < partial.size(); ++j) partial[j] -= e.index[j];
        }
    }
};

}  // namespace

std::vector<ClosedPath> enumerate_closed_paths(const ModifiedFundamentalGraph& g, int n,
                                               const ClosedPathFilter& filter, int lengthCap) {
    check_depth(n, lengthCap, "path length");
    check_filter_dim(filter.index, g.base.dim);
    if (filter.requireAddedLoop && filter.forbidAddedLoop)
        throw std::invalid_argument("contradictory added-loop filter");

    std::vector<ClosedPath> out;
    PathDfs dfs{g, n, filter, max_abs_index(g.base), &out};
    dfs.partial.assign(g.base.dim, 0);
    dfs.weight.assign(g.base.numVertices, 0);
    for (int s = 0; s < g.base.numVertices; ++s) {
        dfs.start = s;
        dfs.run(s, 0);
    }
    return out;
}

std::vector<int> canonical_rotation(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    int best = 0;
    for (int p = 1; p < n; ++p) {
        for (int i = 0; i < n; ++i) {
            int a = seq[(p + i) % n];
            int b = seq[(best + i) % n];
            if (a != b) {
                if (a < b) best = p;
                break;
            }
        }
    }
    std::vector<int> rotated(n);
    for (int i = 0; i < n; ++i) rotated[i] = seq[(best + i) % n];
    return rotated;
}

Cycle make_cycle(const ModifiedFundamentalGraph& g, const std::vector<int>& edgeIds) {
    if (edgeIds.empty()) throw std::invalid_argument("empty edge sequence");
    Cycle c;
    c.index.assign(g.base.dim, 0);
    c.weight.assign(g.base.numVertices, 0);
    for (size_t i = 0; i < edgeIds.size(); ++i) {
        int id = edgeIds[i];
        if (id < 0 || id >= static_cast<int>(g.edges.size()))
            throw std::invalid_argument("edge id out of range");
        const OrientedEdge& e = g.edges[id];
        const OrientedEdge& next = g.edges[edgeIds[(i + 1) % edgeIds.size()]];
        if (e.head != next.tail) throw std::invalid_argument("edge sequence is not a closed walk");
        c.index = add(c.index, e.index);
        if (g.is_added_loop(id)) ++c.weight[e.tail];
    }
    c.edgeIds = canonical_rotation(edgeIds);
    return c;
}

Cycle reverse_cycle(const ModifiedFundamentalGraph& g, const Cycle& c) {
    std::vector<int> rev(c.edgeIds.size());
    for (size_t i = 0; i < c.edgeIds.size(); ++i)
        rev[rev.size() - 1 - i] = g.edges[c.edgeIds[i]].reverse;
    return make_cycle(g, rev);
}

int minimal_period(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (int i = p; i < n && periodic; ++i) periodic = (seq[i] == seq[i - p]);
        if (periodic) return p;
    }
    return n;
}

bool is_prime(const Cycle& c) {
    return minimal_period(c.edgeIds) == c.length();
}

PrimeDecomposition prime_decompose(const ModifiedFundamentalGraph& g, const Cycle& c) {
    int p = minimal_period(c.edgeIds);
    std::vector<int> rootIds(c.edgeIds.begin(), c.edgeIds.begin() + p);
    return {make_cycle(g, rootIds), c.length() / p};
}

void for_each_prime_cycle(const ModifiedFundamentalGraph& g, int maxLen, CycleClass cls,
                          const std::function<void(const Cycle&)>& fn,
                          const std::optional<IndexVector>& indexFilter, int lengthCap) {
    check_depth(maxLen, lengthCap, "cycle length bound");
    check_filter_dim(indexFilter, g.base.dim);

    CycleDfs dfs{g, maxLen, cls, &indexFilter, max_abs_index(g.base), &fn};
    dfs.partial.assign(g.base.dim, 0);
    dfs.weight.assign(g.base.numVertices, 0);
    for (int s = 0; s < g.base.numVertices; ++s) {
        dfs.start = s;
        for (int firstId : g.out[s]) {
            const OrientedEdge& e0 = g.edges[firstId];
            bool loop = g.is_added_loop(firstId);
            if (loop && cls == CycleClass::BaseOnly) continue;
            dfs.minId = firstId;
            dfs.ids.push_back(firstId);
            dfs.partial = e0.index;
            if (loop) {
                ++dfs.weight[e0.tail];
                ++dfs.loopsUsed;
            }
            if (!indexFilter ||
                !index_unreachable(dfs.partial, *indexFilter, dfs.maxAbs, maxLen - 1)) {
                dfs.run(e0.head, 1);
            }
            if (loop) {
                --dfs.weight[e0.tail];
                --dfs.loopsUsed;
            }
            dfs.ids.pop_back();
            dfs.partial.assign(g.base.dim, 0);
        }
    }
}

std::vector<Cycle> enumerate_prime_cycles(const ModifiedFundamentalGraph& g, int maxLen,
                                          CycleClass cls,
                                          const std::optional<IndexVector>& indexFilter,
                                          int lengthCap) {
    std::vector<Cycle> cycles;
    for_each_prime_cycle(
        g, maxLen, cls, [&](const Cycle& c) { cycles.push_back(c); }, indexFilter, lengthCap);
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.edgeIds < b.edgeIds;
    });
    return cycles;
}

}  // namespace perispec
