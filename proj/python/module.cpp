#include "perispec/builtins.hpp"
#include "perispec/cycles.hpp"
#include "perispec/floquet.hpp"
#include "perispec/graph.hpp"
#include "perispec/invariants.hpp"
#include "perispec/json_io.hpp"
#include "perispec/lattice.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace perispec;

namespace {

py::object fraction_class() {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls;
}

py::object to_py(const Rational& r) { return fraction_class()(rational_to_string(r)); }

// (Fraction, Fraction) pair; exact, unlike a Python complex.
py::tuple to_py(const ComplexRational& z) { return py::make_tuple(to_py(z.re), to_py(z.im)); }

Rational rational_from_py(py::handle obj) {
    if (py::isinstance<py::int_>(obj)) return parse_rational(py::str(obj));
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return parse_rational(py::str(obj.attr("numerator"))) /
               parse_rational(py::str(obj.attr("denominator")));
    throw py::type_error("expected int, 'p/q' string, or Fraction, got " +
                         std::string(py::str(obj.get_type())));
}

ComplexRational complex_rational_from_py(py::handle obj) {
    if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
        auto seq = obj.cast<py::sequence>();
        if (seq.size() != 2) throw py::type_error("complex potential entry needs (re, im)");
        return {rational_from_py(seq[0]), rational_from_py(seq[1])};
    }
    return ComplexRational{rational_from_py(obj)};
}

Potential potential_from_py(py::handle obj) {
    Potential q;
    for (py::handle item : obj.cast<py::sequence>())
        q.values.push_back(complex_rational_from_py(item));
    return q;
}

py::list potential_to_py(const Potential& q) {
    py::list out;
    for (const auto& v : q.values) out.append(to_py(v));
    return out;
}

py::dict witness_to_py(const IsospectralWitness& w) {
    py::dict d;
    d["n"] = w.n;
    d["m"] = w.m ? py::object(py::cast(*w.m)) : py::object(py::none());
    d["lhs"] = to_py(w.lhs);
    d["rhs"] = to_py(w.rhs);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Spectral invariants of discrete periodic Schrodinger operators";

    py::register_exception<ParseError>(mod, "GraphParseError", PyExc_ValueError);

    py::class_<FundamentalGraph>(mod, "Graph")
        .def_readonly("dim", &FundamentalGraph::dim)
        .def_readonly("num_vertices", &FundamentalGraph::numVertices)
        .def_property_readonly("num_edges", &FundamentalGraph::numDeclarations)
        .def("degree", &FundamentalGraph::degree, py::arg("vertex"))
        .def("edges",
             [](const FundamentalGraph& g) {
                 py::list out;
                 for (const auto& e : g.edges) {
                     py::dict d;
                     d["id"] = e.id;
                     d["tail"] = e.tail;
                     d["head"] = e.head;
                     d["index"] = e.index;
                     out.append(d);
                 }
                 return out;
             })
        .def("serialize", &serialize_graph)
        .def("validate",
             [](const FundamentalGraph& g) {
                 validate_graph(g);
                 auto diag = validate_full_rank(g);
                 py::dict d;
                 d["rank"] = diag.rank;
                 d["full_rank"] = diag.fullRank;
                 d["lattice_index"] = diag.latticeIndex;
                 d["full_lattice"] = diag.fullLattice;
                 d["message"] = diag.message;
                 return d;
             })
        .def("is_bipartite", &periodic_graph_bipartite)
        .def("max_abs_index", &max_abs_index)
        .def("__eq__", [](const FundamentalGraph& a, const FundamentalGraph& b) { return a == b; })
        .def("__repr__", [](const FundamentalGraph& g) {
            std::ostringstream ss;
            ss << "Graph(dim=" << g.dim << ", vertices=" << g.numVertices
               << ", edges=" << g.numDeclarations() << ")";
            return ss.str();
        });

    py::class_<PotentialPolynomial>(mod, "Polynomial")
        .def_property_readonly("num_vars", &PotentialPolynomial::num_vars)
        .def("is_zero", &PotentialPolynomial::is_zero)
        .def("total_degree", &PotentialPolynomial::total_degree)
        .def("min_term_degree", &PotentialPolynomial::min_term_degree)
        .def("coefficients_integral", &PotentialPolynomial::coefficients_integral)
        .def("terms",
             [](const PotentialPolynomial& p) {
                 py::list out;
                 for (const auto& [mono, coeff] : p.terms())
                     out.append(py::make_tuple(py::tuple(py::cast(mono)), to_py(coeff)));
                 return out;
             })
        .def(
            "evaluate",
            [](const PotentialPolynomial& p, py::handle q) {
                return to_py(p.evaluate(potential_from_py(q).values));
            },
            py::arg("potential"))
        .def(
            "evaluate_float",
            [](const PotentialPolynomial& p, py::handle q) {
                auto v = p.evaluate(potential_from_py(q).values);
                return std::complex<double>(to_double(v.re), to_double(v.im));
            },
            py::arg("potential"))
        .def("__add__", [](const PotentialPolynomial& a, const PotentialPolynomial& b) { return a + b; })
        .def("__sub__", [](const PotentialPolynomial& a, const PotentialPolynomial& b) { return a - b; })
        .def("__mul__", [](const PotentialPolynomial& a, const PotentialPolynomial& b) { return a * b; })
        .def("__eq__", [](const PotentialPolynomial& a, const PotentialPolynomial& b) { return a == b; })
        .def("__str__", [](const PotentialPolynomial& p) { return p.to_string(); })
        .def("__repr__", [](const PotentialPolynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

    py::class_<InvariantTable>(mod, "InvariantTable")
        .def_readonly("num_vertices", &InvariantTable::numVertices)
        .def_readonly("dim", &InvariantTable::dim)
        .def_readonly("max_order", &InvariantTable::nuMax)
        .def("box_radius", &InvariantTable::box_radius, py::arg("n"))
        .def("get", &InvariantTable::get, py::arg("n"), py::arg("m"))
        .def("marginal", &InvariantTable::marginal, py::arg("n"),
             py::return_value_policy::reference_internal)
        .def("entries",
             [](const InvariantTable& t) {
                 py::list out;
                 for (const auto& [key, poly] : t.entries)
                     out.append(py::make_tuple(key.first, py::tuple(py::cast(key.second)), poly));
                 return out;
             })
        .def("to_json", [](const InvariantTable& t) { return to_json(t).dump(2); });

    py::class_<Cycle>(mod, "Cycle")
        .def_readonly("edge_ids", &Cycle::edgeIds)
        .def_readonly("index", &Cycle::index)
        .def_property_readonly("length", &Cycle::length)
        .def_property_readonly("weight", [](const Cycle& c) { return weight_to_string(c.weight); })
        .def("__repr__", [](const Cycle& c) { return to_json(c).dump(); });

    py::class_<TraceReport>(mod, "TraceReport")
        .def_readonly("max_order", &TraceReport::nMax)
        .def_readonly("tolerance", &TraceReport::tolerance)
        .def_readonly("max_residual", &TraceReport::maxResidual)
        .def_readonly("max_abs_lhs", &TraceReport::maxAbsLhs)
        .def_readonly("passed", &TraceReport::pass)
        .def_property_readonly("num_samples",
                               [](const TraceReport& r) { return r.samples.size(); })
        .def("to_json", [](const TraceReport& r) { return to_json(r).dump(2); })
        .def("__bool__", [](const TraceReport& r) { return r.pass; });

    py::class_<IsospectralResult>(mod, "IsospectralResult")
        .def_readonly("isospectral", &IsospectralResult::isospectral)
        .def_property_readonly("witness",
                               [](const IsospectralResult& r) -> py::object {
                                   if (!r.witness) return py::none();
                                   return witness_to_py(*r.witness);
                               })
        .def("__bool__", [](const IsospectralResult& r) { return r.isospectral; });

    py::class_<LinearQuadraticResult>(mod, "LinearQuadraticResult")
        .def_readonly("m", &LinearQuadraticResult::m)
        .def_readonly("shortest_length", &LinearQuadraticResult::shortestLength)
        .def_readonly("bipartite", &LinearQuadraticResult::bipartite)
        .def_readonly("num_shortest", &LinearQuadraticResult::numShortest)
        .def_readonly("linear", &LinearQuadraticResult::linear)
        .def_readonly("quadratic", &LinearQuadraticResult::quadratic);

    mod.def("parse_graph", [](const std::string& text) {
        auto gf = parse_graph(text);
        return py::make_tuple(gf.graph, gf.potential ? py::object(potential_to_py(*gf.potential))
                                                     : py::object(py::none()));
    });
    mod.def("pendant", &builtin_pendant);
    mod.def("kagome", &builtin_kagome);
    mod.def("cycle_graph", &builtin_cycle, py::arg("nu"));
    mod.def(
        "zd_lattice", [](const std::vector<int>& periods) { return build_zd(ZdSpec{periods}); },
        py::arg("periods"));
    mod.def("builtin", [](const std::string& token) -> py::object {
        auto g = parse_builtin_token(token);
        if (!g) return py::none();
        return py::cast(*g);
    });

    mod.def(
        "invariant_table",
        [](const FundamentalGraph& g, int maxOrder, int cap) {
            return invariant_table(g, maxOrder, cap);
        },
        py::arg("graph"), py::arg("max_order"), py::arg("length_cap") = kDefaultLengthCap);
    mod.def(
        "invariant",
        [](const FundamentalGraph& g, int n, std::optional<IndexVector> m, int cap) {
            return m ? invariant_floquet(g, n, *m, cap) : invariant_periodic(g, n, cap);
        },
        py::arg("graph"), py::arg("n"), py::arg("m") = py::none(),
        py::arg("length_cap") = kDefaultLengthCap);
    mod.def(
        "closed_form",
        [](const FundamentalGraph& g, int n, std::optional<IndexVector> m) {
            return m ? closed_form_floquet(g, n, *m) : closed_form_periodic(g, n);
        },
        py::arg("graph"), py::arg("n"), py::arg("m") = py::none());
    mod.def(
        "linear_quadratic",
        [](const FundamentalGraph& g, const IndexVector& m, int cap) {
            return linear_quadratic_invariants(g, m, cap);
        },
        py::arg("graph"), py::arg("m"), py::arg("length_cap") = kDefaultLengthCap);

    mod.def(
        "prime_cycles",
        [](const FundamentalGraph& g, int maxLen, bool baseOnly,
           std::optional<IndexVector> indexFilter, int cap) {
            auto mod2 = modified_graph(g);
            return enumerate_prime_cycles(
                mod2, maxLen, baseOnly ? CycleClass::BaseOnly : CycleClass::WithAddedLoop,
                indexFilter, cap);
        },
        py::arg("graph"), py::arg("max_len"), py::arg("base_only") = false,
        py::arg("index") = py::none(), py::arg("length_cap") = kDefaultLengthCap);

    mod.def(
        "verify_trace",
        [](const FundamentalGraph& g, py::handle q, int maxOrder, int gridN, int samples,
           uint64_t seed, double tol, int cap) {
            return verify_trace_formula(g, potential_from_py(q), maxOrder, gridN, samples, seed,
                                        tol, cap);
        },
        py::arg("graph"), py::arg("potential"), py::arg("max_order"), py::arg("grid") = 8,
        py::arg("samples") = 16, py::arg("seed") = 0, py::arg("tolerance") = 1e-9,
        py::arg("length_cap") = kDefaultLengthCap);

    mod.def(
        "isospectral",
        [](const FundamentalGraph& g, py::handle q1, py::handle q2, const std::string& mode,
           int cap) {
            auto p1 = potential_from_py(q1), p2 = potential_from_py(q2);
            if (mode == "floquet") return isospectral_floquet(g, p1, p2, cap);
            if (mode == "periodic") return isospectral_periodic(g, p1, p2, cap);
            throw py::value_error("mode must be 'floquet' or 'periodic'");
        },
        py::arg("graph"), py::arg("q1"), py::arg("q2"), py::arg("mode") = "floquet",
        py::arg("length_cap") = kDefaultLengthCap);

    mod.def(
        "pendant_partner",
        [](const FundamentalGraph& g, py::handle q) {
            auto pair = pendant_isospectral_pair(g, potential_from_py(q));
            return py::make_tuple(potential_to_py(pair.first), potential_to_py(pair.second));
        },
        py::arg("graph"), py::arg("potential"));

    mod.def(
        "zd_closed_form",
        [](const std::vector<int>& periods, int n, std::optional<int> axis) {
            ZdSpec spec{periods};
            if (!axis) return zd_periodic_closed_form(spec, n);
            int p = spec.periods.at(*axis);
            if (n != p + 1 && n != p + 2)
                throw py::value_error("closed forms exist at orders p+1 and p+2 only");
            return zd_floquet_closed_form(spec, *axis, n - p);
        },
        py::arg("periods"), py::arg("n"), py::arg("axis") = py::none());

    mod.def(
        "zd_fourier",
        [](const std::vector<int>& periods, py::handle q) {
            ZdSpec spec{periods};
            auto vals = fourier_invariants(spec, potential_from_py(q));
            py::dict d;
            d["i1"] = vals.i1;
            d["i2"] = vals.i2 ? py::object(py::cast(*vals.i2)) : py::object(py::none());
            py::list quad;
            for (const auto& v : vals.quadratic)
                quad.append(v ? py::object(py::cast(*v)) : py::object(py::none()));
            d["quadratic"] = quad;
            return d;
        },
        py::arg("periods"), py::arg("potential"));

    mod.def(
        "dft",
        [](const std::vector<int>& periods, py::handle q) {
            return dft(ZdSpec{periods}, potential_from_py(q)).values;
        },
        py::arg("periods"), py::arg("potential"));

    mod.attr("DEFAULT_LENGTH_CAP") = kDefaultLengthCap;
#ifdef VERSION_INFO
#define STR_(x) #x
#define STR(x) STR_(x)
    mod.attr("__version__") = STR(VERSION_INFO);
#undef STR
#undef STR_
#else
    mod.attr("__version__") = "dev";
#endif
}
