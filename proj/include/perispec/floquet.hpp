#pragma once

#include "perispec/graph.hpp"
#include "perispec/invariants.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace perispec {

// Dense fiber operator at one quasimomentum; row v, column u holds
// sum over edges (v,u) of exp(i<tau,k>), plus Q(v) on the diagonal.
struct FloquetMatrix {
    int nu = 0;
    std::vector<std::complex<double>> a;  // row-major nu x nu

    std::complex<double>& at(int r, int c) { return a[static_cast<size_t>(r) * nu + c]; }
    const std::complex<double>& at(int r, int c) const {
        return a[static_cast<size_t>(r) * nu + c];
    }
};

FloquetMatrix build_floquet(const FundamentalGraph& g, const Potential& q,
                            const std::vector<double>& k);
// The potential-free part A(k) alone.
FloquetMatrix build_free(const FundamentalGraph& g, const std::vector<double>& k);

std::complex<double> trace_power(const FloquetMatrix& m, int n);

struct TraceSample {
    int n = 0;
    std::vector<double> k;
    std::complex<double> lhs;  // Tr(H^n(k) - A^n(k)), numeric
    std::complex<double> rhs;  // sum over m of n*I_n^m(Q) cos<m,k>, from the exact table
    double residual = 0;       // |lhs - rhs|
};

struct TraceReport {
    int nMax = 0;
    double tolerance = 0;
    double maxResidual = 0;
    double maxAbsLhs = 0;
    bool pass = false;  // maxResidual <= tolerance * max(1, maxAbsLhs)
    std::vector<TraceSample> samples;
};

// Compares the power traces of the numerically assembled fiber matrices
// against the cosine series built from the exact invariants, on a shifted
// uniform grid (gridN points per axis, offset by a third of a step so no
// sample lands on a symmetry point) plus seeded uniform random points.
TraceReport verify_trace_formula(const FundamentalGraph& g, const Potential& q, int nMax,
                                 int gridN = 8, int randomSamples = 16, uint64_t seed = 0,
                                 double tolerance = 1e-9, int lengthCap = kDefaultLengthCap);

struct IsospectralWitness {
    int n = 0;
    std::optional<IndexVector> m;  // absent for the periodic-spectrum comparison
    ComplexRational lhs;
    ComplexRational rhs;
};

struct IsospectralResult {
    bool isospectral = false;
    std::optional<IsospectralWitness> witness;
};

// Exact equality of all invariant values up to order nu; by completeness of
// the system this decides equality of the corresponding spectra.
IsospectralResult isospectral_floquet(const FundamentalGraph& g, const Potential& q1,
                                      const Potential& q2, int lengthCap = kDefaultLengthCap);
IsospectralResult isospectral_periodic(const FundamentalGraph& g, const Potential& q1,
                                       const Potential& q2, int lengthCap = kDefaultLengthCap);

// For the pendant-lattice builtin only: the reflection (q0,q1) -> (q1-2, q0+2)
// preserves both periodic invariants, giving a guaranteed isospectral partner.
// The returned pair is re-verified through isospectral_periodic before return.
std::pair<Potential, Potential> pendant_isospectral_pair(const FundamentalGraph& g,
                                                         const Potential& q);

}  // namespace perispec
