#pragma once

#include "perispec/graph.hpp"
#include "perispec/polynomial.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace perispec {

// d-dimensional integer lattice folded by periods p_1..p_d (each >= 2). The
// fundamental domain is the box 0 <= n_j < p_j; vertex ids are row-major with
// the last coordinate fastest. The wrap-around edge of each axis carries the
// unit index of that axis, every other edge index is zero. Axes with p_j = 2
// fold into double edges.
struct ZdSpec {
    std::vector<int> periods;

    int dim() const { return static_cast<int>(periods.size()); }
    int numVertices() const {
        int p = 1;
        for (int x : periods) p *= x;
        return p;
    }
};

FundamentalGraph build_zd(const ZdSpec& spec);

int zd_vertex_id(const ZdSpec& spec, const std::vector<int>& coords);
std::vector<int> zd_vertex_coords(const ZdSpec& spec, int id);

// Closed forms of the first three periodic invariants: I1 = sum q,
// I2 = (1/2) sum q^2, I3 = (1/3) sum q^3 + 2(d + #{p_j = 2}) sum q.
PotentialPolynomial zd_periodic_closed_form(const ZdSpec& spec, int n);

// Closed forms of the first two nonzero invariants at the unit index of an
// axis (0-based): order p_j + 1 equals I1; order p_j + 2 equals
// I2 + (1/2) sum over lines along the axis of (line sum of q)^2.
PotentialPolynomial zd_floquet_closed_form(const ZdSpec& spec, int axis, int orderAbove);

struct ZdPeriodicInvariants {
    ComplexRational i1, i2, i3;
};
ZdPeriodicInvariants zd_periodic_invariants(const ZdSpec& spec, const Potential& q);

struct ZdFloquetInvariants {
    int axis = 0;
    int linearOrder = 0;     // p_axis + 1
    int quadraticOrder = 0;  // p_axis + 2
    ComplexRational linear;
    ComplexRational quadratic;
};
ZdFloquetInvariants zd_floquet_invariants(const ZdSpec& spec, const Potential& q, int axis);

// Plain O(p^2) discrete Fourier transform, hat(Q)(l) = (1/p) sum_n
// exp(-2 pi i sum_j l_j n_j / p_j) Q(n), indexed like vertex ids.
struct FourierPotential {
    std::vector<int> periods;
    std::vector<std::complex<double>> values;
};

FourierPotential dft(const ZdSpec& spec, const Potential& q);
std::vector<std::complex<double>> inverse_dft(const FourierPotential& fp);

// Invariants recovered from the Fourier side. I1 = p * hat(Q)(0) holds for any
// complex potential; the quadratic identities assume a real potential and stay
// unset otherwise.
struct FourierInvariantValues {
    std::complex<double> i1;
    std::optional<double> i2;                    // (p/2) sum |hat(Q)|^2
    std::vector<std::optional<double>> quadratic;  // per axis, I2 + (p p_j/2) sum_{l_j=0} |hat(Q)(l)|^2
};

FourierInvariantValues fourier_invariants(const ZdSpec& spec, const Potential& q);

}  // namespace perispec
