#include "perispec/builtins.hpp"
#include "perispec/cycles.hpp"
#include "perispec/floquet.hpp"
#include "perispec/graph.hpp"
#include "perispec/invariants.hpp"
#include "perispec/json_io.hpp"
#include "perispec/lattice.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace perispec;

constexpr int kExitOk = 0;
constexpr int kExitNotIsospectral = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return in.good();
}

// Builtin token first, file path second.
GraphFile load_graph(const std::string& token) {
    if (auto g = parse_builtin_token(token)) return GraphFile{std::move(*g), std::nullopt};
    if (!file_exists(token))
        throw std::invalid_argument("graph argument is neither a builtin token nor a readable file: " +
                                    token);
    return parse_graph(read_file(token));
}

ComplexRational parse_complex_entry(const std::string& entry) {
    auto colon = entry.find(':');
    if (colon == std::string::npos) return ComplexRational{parse_rational(entry)};
    return ComplexRational{parse_rational(entry.substr(0, colon)),
                           parse_rational(entry.substr(colon + 1))};
}

// A potential file, or an inline comma list "1/2,-3,0:1" with re:im entries.
Potential load_potential(const std::string& arg, int expectedVertices) {
    if (file_exists(arg)) return parse_potential(read_file(arg), expectedVertices);
    Potential q;
    std::stringstream ss(arg);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        size_t a = entry.find_first_not_of(" \t");
        size_t b = entry.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty potential entry");
        q.values.push_back(parse_complex_entry(entry.substr(a, b - a + 1)));
    }
    if (expectedVertices >= 0 && static_cast<int>(q.values.size()) != expectedVertices)
        throw std::invalid_argument("potential has " + std::to_string(q.values.size()) +
                                    " entries, graph has " + std::to_string(expectedVertices) +
                                    " vertices");
    return q;
}

std::vector<int> parse_int_list(const std::string& arg) {
    std::vector<int> out;
    std::stringstream ss(arg);
    std::string entry;
    while (std::getline(ss, entry, ',')) out.push_back(std::stoi(entry));
    return out;
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + outPath);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const Json& j, const std::string& outPath) { emit(j.dump(2), outPath); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string trace_csv(const TraceReport& r, int dim) {
    std::ostringstream out;
    out << "n";
    for (int j = 0; j < dim; ++j) out << ",k" << (j + 1);
    out << ",lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
    for (const auto& s : r.samples) {
        out << s.n;
        for (double kj : s.k) out << ',' << format_double(kj);
        out << ',' << format_double(s.lhs.real()) << ',' << format_double(s.lhs.imag()) << ','
            << format_double(s.rhs.real()) << ',' << format_double(s.rhs.imag()) << ','
            << format_double(s.residual) << '\n';
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Spectral invariants of discrete periodic Schrodinger operators"};
    app.require_subcommand(1);

    std::string graphArg, potentialArg, q1Arg, q2Arg, outPath, csvPath, indexArg, periodsArg;
    int maxN = -1, cap = kDefaultLengthCap, maxLen = 0, gridN = 8, samples = 16, axis = -1;
    uint64_t seed = 0;
    double tol = 1e-9;
    bool baseOnly = false;
    std::string mode = "floquet";

    auto* inv = app.add_subcommand("invariants",
                                   "Exact invariant polynomials I_n^m and I_n up to an order");
    inv->add_option("--graph", graphArg, "builtin token or graph file")->required();
    inv->add_option("--max-n", maxN, "highest order (default: number of vertices)");
    inv->add_option("--cap", cap, "refuse enumerations past this cycle length");
    inv->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* cyc = app.add_subcommand("cycles", "Prime cycles of the potential-carrying graph");
    cyc->add_option("--graph", graphArg, "builtin token or graph file")->required();
    cyc->add_option("--max-len", maxLen, "largest cycle length")->required();
    cyc->add_option("--index", indexArg, "only cycles with this index, e.g. 1,0");
    cyc->add_flag("--base", baseOnly, "cycles of the base graph instead");
    cyc->add_option("--cap", cap, "refuse enumerations past this cycle length");
    cyc->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* vt = app.add_subcommand(
        "verify-trace", "Check the numeric fiber traces against the exact invariant series");
    vt->add_option("--graph", graphArg, "builtin token or graph file")->required();
    vt->add_option("--potential", potentialArg,
                   "potential file or inline list; falls back to the graph file");
    vt->add_option("--max-n", maxN, "highest power (default: number of vertices)");
    vt->add_option("--grid", gridN, "grid points per quasimomentum axis");
    vt->add_option("--samples", samples, "extra random quasimomentum samples");
    vt->add_option("--seed", seed, "random sample seed");
    vt->add_option("--tol", tol, "relative residual tolerance");
    vt->add_option("--cap", cap, "refuse enumerations past this cycle length");
    vt->add_option("--csv", csvPath, "write per-sample results as CSV");
    vt->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* iso = app.add_subcommand("isospectral",
                                   "Decide whether two potentials share all invariants");
    iso->add_option("--graph", graphArg, "builtin token or graph file")->required();
    iso->add_option("--q1", q1Arg, "first potential (file or inline list)")->required();
    iso->add_option("--q2", q2Arg, "second potential (file or inline list)")->required();
    iso->add_option("--mode", mode, "floquet (default) or periodic")
        ->check(CLI::IsMember({"floquet", "periodic"}));
    iso->add_option("--cap", cap, "refuse enumerations past this cycle length");
    iso->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* lq = app.add_subcommand(
        "linear-quadratic", "First two invariants above the shortest cycle length of an index");
    lq->add_option("--graph", graphArg, "builtin token or graph file")->required();
    lq->add_option("--index", indexArg, "primitive index vector, e.g. 1,0")->required();
    lq->add_option("--cap", cap, "refuse enumerations past this cycle length");
    lq->add_option("--out", outPath, "write JSON here instead of stdout");

    std::vector<std::string> builtinArgs;
    auto* bi = app.add_subcommand("builtin", "Print a builtin graph in file format");
    bi->add_option("name", builtinArgs, "pendant | kagome | cycle NU | zd P1,P2,...")
        ->required()
        ->expected(1, 2);
    bi->add_option("--emit", outPath, "write the graph file here instead of stdout");

    auto* zf = app.add_subcommand(
        "zd-fourier", "Cross-check lattice invariants against their Fourier-side values");
    zf->add_option("--periods", periodsArg, "lattice periods, e.g. 3,3")->required();
    zf->add_option("--potential", potentialArg, "potential file or inline list")->required();
    zf->add_option("--tol", tol, "absolute tolerance for the comparison");
    zf->add_option("--out", outPath, "write JSON here instead of stdout");

    auto* val = app.add_subcommand("validate", "Structural checks and the index-lattice diagnostic");
    val->add_option("--graph", graphArg, "builtin token or graph file")->required();
    val->add_option("--out", outPath, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    if (inv->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        int n = maxN > 0 ? maxN : gf.graph.numVertices;
        emit_json(to_json(invariant_table(gf.graph, n, cap)), outPath);
        return kExitOk;
    }

    if (cyc->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        std::optional<IndexVector> filter;
        if (!indexArg.empty()) {
            filter = parse_int_list(indexArg);
            if (static_cast<int>(filter->size()) != gf.graph.dim)
                throw std::invalid_argument("index has wrong dimension");
        }
        auto mod = modified_graph(gf.graph);
        auto cycles = enumerate_prime_cycles(
            mod, maxLen, baseOnly ? CycleClass::BaseOnly : CycleClass::WithAddedLoop, filter, cap);
        Json j;
        j["count"] = cycles.size();
        j["cycles"] = Json::array();
        for (const auto& c : cycles) j["cycles"].push_back(to_json(c));
        emit_json(j, outPath);
        return kExitOk;
    }

    if (vt->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        Potential q;
        if (!potentialArg.empty())
            q = load_potential(potentialArg, gf.graph.numVertices);
        else if (gf.potential)
            q = *gf.potential;
        else
            throw std::invalid_argument("no potential given and the graph file carries none");
        int n = maxN > 0 ? maxN : gf.graph.numVertices;
        auto report = verify_trace_formula(gf.graph, q, n, gridN, samples, seed, tol, cap);
        if (!csvPath.empty()) emit(trace_csv(report, gf.graph.dim), csvPath);
        emit_json(to_json(report), outPath);
        return report.pass ? kExitOk : kExitVerifyFailed;
    }

    if (iso->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        Potential q1 = load_potential(q1Arg, gf.graph.numVertices);
        Potential q2 = load_potential(q2Arg, gf.graph.numVertices);
        auto result = mode == "periodic" ? isospectral_periodic(gf.graph, q1, q2, cap)
                                         : isospectral_floquet(gf.graph, q1, q2, cap);
        emit_json(to_json(result), outPath);
        return result.isospectral ? kExitOk : kExitNotIsospectral;
    }

    if (lq->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        IndexVector m = parse_int_list(indexArg);
        if (static_cast<int>(m.size()) != gf.graph.dim)
            throw std::invalid_argument("index has wrong dimension");
        emit_json(to_json(linear_quadratic_invariants(gf.graph, m, cap)), outPath);
        return kExitOk;
    }

    if (bi->parsed()) {
        emit(serialize_graph(build_builtin(builtinArgs)), outPath);
        return kExitOk;
    }

    if (zf->parsed()) {
        ZdSpec spec{parse_int_list(periodsArg)};
        for (int p : spec.periods)
            if (p < 2) throw std::invalid_argument("each period must be at least 2");
        Potential q = load_potential(potentialArg, spec.numVertices());
        auto exactPeriodic = zd_periodic_invariants(spec, q);
        auto fourier = fourier_invariants(spec, q);

        auto cx = [](const ComplexRational& z) {
            return std::complex<double>(to_double(z.re), to_double(z.im));
        };
        double worst = 0;
        Json j;
        j["periods"] = spec.periods;
        j["real"] = q.is_real();
        j["i1"] = {{"exact", complex_rational_to_string(exactPeriodic.i1)},
                   {"fourier_re", fourier.i1.real()},
                   {"fourier_im", fourier.i1.imag()}};
        worst = std::abs(fourier.i1 - cx(exactPeriodic.i1));
        j["i1"]["delta"] = worst;
        if (fourier.i2) {
            double d = std::abs(*fourier.i2 - to_double(exactPeriodic.i2.re));
            worst = std::max(worst, d);
            j["i2"] = {{"exact", complex_rational_to_string(exactPeriodic.i2)},
                       {"fourier", *fourier.i2},
                       {"delta", d}};
        }
        j["axes"] = Json::array();
        for (int ax = 0; ax < spec.dim(); ++ax) {
            auto exact = zd_floquet_invariants(spec, q, ax);
            Json row;
            row["axis"] = ax;
            row["linear_order"] = exact.linearOrder;
            row["quadratic_order"] = exact.quadraticOrder;
            row["linear_exact"] = complex_rational_to_string(exact.linear);
            if (fourier.quadratic[ax]) {
                double d = std::abs(*fourier.quadratic[ax] - to_double(exact.quadratic.re));
                worst = std::max(worst, d);
                row["quadratic_exact"] = complex_rational_to_string(exact.quadratic);
                row["quadratic_fourier"] = *fourier.quadratic[ax];
                row["delta"] = d;
            }
            j["axes"].push_back(row);
        }
        j["max_delta"] = worst;
        j["tolerance"] = tol;
        bool pass = worst <= tol;
        j["pass"] = pass;
        emit_json(j, outPath);
        return pass ? kExitOk : kExitVerifyFailed;
    }

    if (val->parsed()) {
        auto gf = load_graph(graphArg);
        validate_graph(gf.graph);
        auto diag = validate_full_rank(gf.graph);
        Json j;
        j["dim"] = gf.graph.dim;
        j["vertices"] = gf.graph.numVertices;
        j["edges"] = gf.graph.numDeclarations();
        j["bipartite"] = periodic_graph_bipartite(gf.graph);
        j["index_rank"] = diag.rank;
        j["full_rank"] = diag.fullRank;
        if (diag.fullRank) j["lattice_index"] = diag.latticeIndex;
        j["full_lattice"] = diag.fullLattice;
        j["message"] = diag.message;
        j["has_potential"] = gf.potential.has_value();
        emit_json(j, outPath);
        return kExitOk;
    }

    return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
