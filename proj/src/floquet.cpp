#include "perispec/floquet.hpp"

#include "perispec/builtins.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace perispec {

namespace {

using ComplexMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const ComplexMatrix> as_eigen(const FloquetMatrix& m) {
    return {m.a.data(), m.nu, m.nu};
}

void check_k(const FundamentalGraph& g, const std::vector<double>& k) {
    if (static_cast<int>(k.size()) != g.dim)
        throw std::invalid_argument("quasimomentum arity does not match graph dimension");
}

double dot(const IndexVector& m, const std::vector<double>& k) {
    double s = 0;
    for (size_t j = 0; j < m.size(); ++j) s += m[j] * k[j];
    return s;
}

std::complex<double> to_complex(const ComplexRational& z) {
    return {to_double(z.re), to_double(z.im)};
}

// Uniform in [-pi, pi) from the top 53 bits; fully pinned down by the mt19937_64
// spec, unlike std::uniform_real_distribution.
double uniform_angle(std::mt19937_64& rng) {
    double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    return -std::numbers::pi + 2.0 * std::numbers::pi * u;
}

}  // namespace

FloquetMatrix build_free(const FundamentalGraph& g, const std::vector<double>& k) {
    check_k(g, k);
    FloquetMatrix m;
    m.nu = g.numVertices;
    m.a.assign(static_cast<size_t>(m.nu) * m.nu, {});
    for (const OrientedEdge& e : g.edges)
        m.at(e.tail, e.head) += std::polar(1.0, dot(e.index, k));
    return m;
}

FloquetMatrix build_floquet(const FundamentalGraph& g, const Potential& q,
                            const std::vector<double>& k) {
    if (static_cast<int>(q.values.size()) != g.numVertices)
        throw std::invalid_argument("potential size does not match vertex count");
    FloquetMatrix m = build_free(g, k);
    for (int v = 0; v < g.numVertices; ++v) m.at(v, v) += to_complex(q.values[v]);
    return m;
}

std::complex<double> trace_power(const FloquetMatrix& m, int n) {
    if (n < 1) throw std::invalid_argument("trace power must be >= 1");
    ComplexMatrix p = as_eigen(m);
    for (int i = 1; i < n; ++i) p = p * as_eigen(m);
    return p.trace();
}

TraceReport verify_trace_formula(const FundamentalGraph& g, const Potential& q, int nMax,
                                 int gridN, int randomSamples, uint64_t seed, double tolerance,
                                 int lengthCap) {
    if (gridN < 1) throw std::invalid_argument("grid resolution must be >= 1");
    if (randomSamples < 0) throw std::invalid_argument("sample count must be >= 0");
    if (static_cast<int>(q.values.size()) != g.numVertices)
        throw std::invalid_argument("potential size does not match vertex count");

    InvariantTable table = invariant_table(g, nMax, lengthCap);

    // t_n^m = n * I_n^m(Q), dropping exact zeros.
    struct CosTerm {
        IndexVector m;
        std::complex<double> t;
    };
    std::vector<std::vector<CosTerm>> series(nMax + 1);
    for (const auto& [key, poly] : table.entries) {
        if (poly.is_zero()) continue;
        ComplexRational value = poly.evaluate(q.values);
        if (value.is_zero()) continue;
        ComplexRational scaled = value * ComplexRational{Rational(key.first)};
        series[key.first].push_back({key.second, to_complex(scaled)});
    }

    std::vector<std::vector<double>> points;
    {
        std::vector<int> idx(g.dim, 0);
        while (true) {
            std::vector<double> k(g.dim);
            for (int j = 0; j < g.dim; ++j)
                k[j] = -std::numbers::pi +
                       2.0 * std::numbers::pi * (idx[j] + 1.0 / 3.0) / gridN;
            points.push_back(std::move(k));
            int j = g.dim - 1;
            while (j >= 0 && idx[j] == gridN - 1) idx[j--] = 0;
            if (j < 0) break;
            ++idx[j];
        }
        std::mt19937_64 rng(seed);
        for (int s = 0; s < randomSamples; ++s) {
            std::vector<double> k(g.dim);
            for (int j = 0; j < g.dim; ++j) k[j] = uniform_angle(rng);
            points.push_back(std::move(k));
        }
    }

    TraceReport report;
    report.nMax = nMax;
    report.tolerance = tolerance;

    for (const auto& k : points) {
        FloquetMatrix h = build_floquet(g, q, k);
        FloquetMatrix a = build_free(g, k);
        ComplexMatrix hp = as_eigen(h);
        ComplexMatrix ap = as_eigen(a);
        for (int n = 1; n <= nMax; ++n) {
            if (n > 1) {
                hp = hp * as_eigen(h);
                ap = ap * as_eigen(a);
            }
            TraceSample sample;
            sample.n = n;
            sample.k = k;
            sample.lhs = hp.trace() - ap.trace();
            sample.rhs = 0;
            for (const CosTerm& term : series[n])
                sample.rhs += term.t * std::cos(dot(term.m, k));
            sample.residual = std::abs(sample.lhs - sample.rhs);
            report.maxResidual = std::max(report.maxResidual, sample.residual);
            report.maxAbsLhs = std::max(report.maxAbsLhs, std::abs(sample.lhs));
            report.samples.push_back(std::move(sample));
        }
    }
    report.pass = report.maxResidual <= tolerance * std::max(1.0, report.maxAbsLhs);
    return report;
}

namespace {

IsospectralResult compare_invariants(const FundamentalGraph& g, const Potential& q1,
                                     const Potential& q2, bool perIndex, int lengthCap) {
    if (static_cast<int>(q1.values.size()) != g.numVertices ||
        static_cast<int>(q2.values.size()) != g.numVertices)
        throw std::invalid_argument("potential size does not match vertex count");

    InvariantTable table = invariant_table(g, g.numVertices, lengthCap);
    IsospectralResult res;
    res.isospectral = true;

    if (perIndex) {
        for (const auto& [key, poly] : table.entries) {
            ComplexRational a = poly.evaluate(q1.values);
            ComplexRational b = poly.evaluate(q2.values);
            if (a != b) {
                res.isospectral = false;
                res.witness = IsospectralWitness{key.first, key.second, a, b};
                return res;
            }
        }
    } else {
        for (const auto& [n, poly] : table.marginals) {
            ComplexRational a = poly.evaluate(q1.values);
            ComplexRational b = poly.evaluate(q2.values);
            if (a != b) {
                res.isospectral = false;
                res.witness = IsospectralWitness{n, std::nullopt, a, b};
                return res;
            }
        }
    }
    return res;
}

}  // namespace

IsospectralResult isospectral_floquet(const FundamentalGraph& g, const Potential& q1,
                                      const Potential& q2, int lengthCap) {
    return compare_invariants(g, q1, q2, true, lengthCap);
}

IsospectralResult isospectral_periodic(const FundamentalGraph& g, const Potential& q1,
                                       const Potential& q2, int lengthCap) {
    return compare_invariants(g, q1, q2, false, lengthCap);
}

std::pair<Potential, Potential> pendant_isospectral_pair(const FundamentalGraph& g,
                                                         const Potential& q) {
    if (!(g == builtin_pendant()))
        throw std::invalid_argument("isospectral pair construction needs the pendant builtin");
    if (q.values.size() != 2)
        throw std::invalid_argument("potential size does not match vertex count");

    ComplexRational two{Rational(2)};
    Potential partner;
    partner.values = {q.values[1] - two, q.values[0] + two};

    if (!isospectral_periodic(g, q, partner).isospectral)
        throw std::logic_error("pendant partner failed the invariant comparison");
    return {q, partner};
}

}  // namespace perispec
