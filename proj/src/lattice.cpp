#include "perispec/lattice.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace perispec {

namespace {

void check_spec(const ZdSpec& spec) {
    if (spec.periods.empty()) throw std::invalid_argument("lattice needs at least one period");
    for (int p : spec.periods)
        if (p < 2) throw std::invalid_argument("lattice periods must be >= 2");
}

void check_axis(const ZdSpec& spec, int axis) {
    if (axis < 0 || axis >= spec.dim()) throw std::invalid_argument("lattice axis out of range");
}

void check_potential(const ZdSpec& spec, const Potential& q) {
    if (static_cast<int>(q.values.size()) != spec.numVertices())
        throw std::invalid_argument("potential size does not match lattice vertex count");
}

}  // namespace

int zd_vertex_id(const ZdSpec& spec, const std::vector<int>& coords) {
    if (coords.size() != spec.periods.size())
        throw std::invalid_argument("coordinate arity mismatch");
    int id = 0;
    for (int j = 0; j < spec.dim(); ++j) {
        if (coords[j] < 0 || coords[j] >= spec.periods[j])
            throw std::invalid_argument("coordinate out of range");
        id = id * spec.periods[j] + coords[j];
    }
    return id;
}

std::vector<int> zd_vertex_coords(const ZdSpec& spec, int id) {
    if (id < 0 || id >= spec.numVertices()) throw std::invalid_argument("vertex id out of range");
    std::vector<int> coords(spec.dim());
    for (int j = spec.dim() - 1; j >= 0; --j) {
        coords[j] = id % spec.periods[j];
        id /= spec.periods[j];
    }
    return coords;
}

FundamentalGraph build_zd(const ZdSpec& spec) {
    check_spec(spec);
    std::ostringstream text;
    text << "dim " << spec.dim() << "\n";
    text << "vertices " << spec.numVertices() << "\n";
    for (int v = 0; v < spec.numVertices(); ++v) {
        std::vector<int> c = zd_vertex_coords(spec, v);
        for (int j = 0; j < spec.dim(); ++j) {
            std::vector<int> n = c;
            bool wraps = (c[j] == spec.periods[j] - 1);
            n[j] = wraps ? 0 : c[j] + 1;
            text << "edge " << v << " " << zd_vertex_id(spec, n);
            for (int l = 0; l < spec.dim(); ++l) text << " " << (l == j && wraps ? 1 : 0);
            text << "\n";
        }
    }
    return parse_graph(text.str()).graph;
}

PotentialPolynomial zd_periodic_closed_form(const ZdSpec& spec, int n) {
    check_spec(spec);
    if (n < 1 || n > 3) throw std::invalid_argument("closed forms cover invariant orders 1..3");
    const int nu = spec.numVertices();
    PotentialPolynomial out(nu);
    for (int v = 0; v < nu; ++v) {
        Monomial mono(nu, 0);
        mono[v] = n;
        out.add_term(mono, Rational(1, n));
    }
    if (n < 3) return out;
    int doubled = 0;
    for (int p : spec.periods)
        if (p == 2) ++doubled;
    Rational c(2 * (spec.dim() + doubled));
    for (int v = 0; v < nu; ++v) {
        Monomial mono(nu, 0);
        mono[v] = 1;
        out.add_term(mono, c);
    }
    return out;
}

PotentialPolynomial zd_floquet_closed_form(const ZdSpec& spec, int axis, int orderAbove) {
    check_spec(spec);
    check_axis(spec, axis);
    const int nu = spec.numVertices();

    if (orderAbove == 1) return zd_periodic_closed_form(spec, 1);
    if (orderAbove != 2)
        throw std::invalid_argument("closed forms cover the first two orders above the period");

    PotentialPolynomial out = zd_periodic_closed_form(spec, 2);
    // One line per choice of the off-axis coordinates.
    std::vector<int> c(spec.dim(), 0);
    while (true) {
        PotentialPolynomial line(nu);
        for (int t = 0; t < spec.periods[axis]; ++t) {
            c[axis] = t;
            line += PotentialPolynomial::variable(nu, zd_vertex_id(spec, c));
        }
        c[axis] = 0;
        out += line * line * Rational(1, 2);

        int j = spec.dim() - 1;
        while (j >= 0 && (j == axis || c[j] == spec.periods[j] - 1)) {
            if (j != axis) c[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++c[j];
    }
    return out;
}

ZdPeriodicInvariants zd_periodic_invariants(const ZdSpec& spec, const Potential& q) {
    check_spec(spec);
    check_potential(spec, q);
    return {zd_periodic_closed_form(spec, 1).evaluate(q.values),
            zd_periodic_closed_form(spec, 2).evaluate(q.values),
            zd_periodic_closed_form(spec, 3).evaluate(q.values)};
}

ZdFloquetInvariants zd_floquet_invariants(const ZdSpec& spec, const Potential& q, int axis) {
    check_spec(spec);
    check_axis(spec, axis);
    check_potential(spec, q);
    ZdFloquetInvariants out;
    out.axis = axis;
    out.linearOrder = spec.periods[axis] + 1;
    out.quadraticOrder = spec.periods[axis] + 2;
    out.linear = zd_floquet_closed_form(spec, axis, 1).evaluate(q.values);
    out.quadratic = zd_floquet_closed_form(spec, axis, 2).evaluate(q.values);
    return out;
}

FourierPotential dft(const ZdSpec& spec, const Potential& q) {
    check_spec(spec);
    check_potential(spec, q);
    const int p = spec.numVertices();
    FourierPotential fp;
    fp.periods = spec.periods;
    fp.values.assign(p, {});

    std::vector<std::complex<double>> qd(p);
    for (int v = 0; v < p; ++v)
        qd[v] = {to_double(q.values[v].re), to_double(q.values[v].im)};

    for (int l = 0; l < p; ++l) {
        std::vector<int> lc = zd_vertex_coords(spec, l);
        std::complex<double> acc = 0;
        for (int n = 0; n < p; ++n) {
            std::vector<int> nc = zd_vertex_coords(spec, n);
            double phase = 0;
            for (int j = 0; j < spec.dim(); ++j)
                phase += static_cast<double>(lc[j]) * nc[j] / spec.periods[j];
            acc += std::polar(1.0, -2.0 * std::numbers::pi * phase) * qd[n];
        }
        fp.values[l] = acc / static_cast<double>(p);
    }
    return fp;
}

std::vector<std::complex<double>> inverse_dft(const FourierPotential& fp) {
    ZdSpec spec{fp.periods};
    check_spec(spec);
    const int p = spec.numVertices();
    if (static_cast<int>(fp.values.size()) != p)
        throw std::invalid_argument("fourier data size does not match periods");

    std::vector<std::complex<double>> out(p);
    for (int n = 0; n < p; ++n) {
        std::vector<int> nc = zd_vertex_coords(spec, n);
        std::complex<double> acc = 0;
        for (int l = 0; l < p; ++l) {
            std::vector<int> lc = zd_vertex_coords(spec, l);
            double phase = 0;
            for (int j = 0; j < spec.dim(); ++j)
                phase += static_cast<double>(lc[j]) * nc[j] / spec.periods[j];
            acc += std::polar(1.0, 2.0 * std::numbers::pi * phase) * fp.values[l];
        }
        out[n] = acc;
    }
    return out;
}

FourierInvariantValues fourier_invariants(const ZdSpec& spec, const Potential& q) {
    check_spec(spec);
    check_potential(spec, q);
    FourierPotential fp = dft(spec, q);
    const int p = spec.numVertices();

    FourierInvariantValues out;
    out.i1 = static_cast<double>(p) * fp.values[0];
    out.quadratic.assign(spec.dim(), std::nullopt);
    if (!q.is_real()) return out;  // the quadratic identities need a real potential

    double sumSq = 0;
    for (const auto& z : fp.values) sumSq += std::norm(z);
    out.i2 = 0.5 * p * sumSq;

    for (int j = 0; j < spec.dim(); ++j) {
        double axisSum = 0;
        for (int l = 0; l < p; ++l)
            if (zd_vertex_coords(spec, l)[j] == 0) axisSum += std::norm(fp.values[l]);
        out.quadratic[j] = *out.i2 + 0.5 * p * spec.periods[j] * axisSum;
    }
    return out;
}

}  // namespace perispec
