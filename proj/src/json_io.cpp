#include "perispec/json_io.hpp"

namespace perispec {

Json to_json(const PotentialPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json term;
        term["coeff"] = rational_to_string(coeff);
        term["exps"] = mono;
        terms.push_back(std::move(term));
    }
    return terms;
}

Json to_json(const ComplexRational& z) {
    return {{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
}

std::string weight_to_string(const Monomial& w) {
    std::string s;
    for (size_t v = 0; v < w.size(); ++v) {
        if (w[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += "q" + std::to_string(v) + "^" + std::to_string(w[v]);
    }
    return s.empty() ? "1" : s;
}

Json to_json(const Cycle& c) {
    Json j;
    j["ids"] = c.edgeIds;
    j["length"] = c.length();
    j["index"] = c.index;
    j["weight"] = weight_to_string(c.weight);
    return j;
}

Json to_json(const ClosedPath& p) {
    Json j;
    j["start"] = p.start;
    j["ids"] = p.edgeIds;
    j["length"] = p.length();
    j["index"] = p.index;
    j["weight"] = weight_to_string(p.weight);
    return j;
}

Json to_json(const InvariantTable& t) {
    Json j;
    j["numVertices"] = t.numVertices;
    j["dim"] = t.dim;
    j["nuMax"] = t.nuMax;
    j["maxAbsIndex"] = t.maxAbsIndex;
    Json entries = Json::array();
    for (const auto& [key, poly] : t.entries) {
        Json cell;
        cell["n"] = key.first;
        cell["m"] = key.second;
        cell["poly"] = to_json(poly);
        entries.push_back(std::move(cell));
    }
    j["entries"] = std::move(entries);
    Json marginals = Json::array();
    for (const auto& [n, poly] : t.marginals) {
        Json row;
        row["n"] = n;
        row["poly"] = to_json(poly);
        marginals.push_back(std::move(row));
    }
    j["marginals"] = std::move(marginals);
    return j;
}

Json to_json(const TraceReport& r) {
    Json j;
    j["nMax"] = r.nMax;
    j["tolerance"] = r.tolerance;
    j["maxResidual"] = r.maxResidual;
    j["maxAbsLhs"] = r.maxAbsLhs;
    j["pass"] = r.pass;
    Json samples = Json::array();
    for (const TraceSample& s : r.samples) {
        Json row;
        row["n"] = s.n;
        row["k"] = s.k;
        row["lhsRe"] = s.lhs.real();
        row["lhsIm"] = s.lhs.imag();
        row["rhsRe"] = s.rhs.real();
        row["rhsIm"] = s.rhs.imag();
        row["residual"] = s.residual;
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

Json to_json(const IsospectralResult& r) {
    Json j;
    j["isospectral"] = r.isospectral;
    if (r.witness) {
        Json w;
        w["n"] = r.witness->n;
        if (r.witness->m) w["m"] = *r.witness->m;
        w["lhs"] = to_json(r.witness->lhs);
        w["rhs"] = to_json(r.witness->rhs);
        j["witness"] = std::move(w);
    }
    return j;
}

Json to_json(const LinearQuadraticResult& r) {
    Json j;
    j["m"] = r.m;
    j["shortestLength"] = r.shortestLength;
    j["bipartite"] = r.bipartite;
    j["numShortest"] = r.numShortest;
    j["numShortestPlusOne"] = r.numShortestPlusOne;
    j["linear"] = to_json(r.linear);
    j["quadratic"] = to_json(r.quadratic);
    return j;
}

Json to_json(const FourierInvariantValues& v) {
    Json j;
    j["i1Re"] = v.i1.real();
    j["i1Im"] = v.i1.imag();
    if (v.i2) j["i2"] = *v.i2;
    Json quad = Json::array();
    for (const auto& q : v.quadratic) {
        if (q)
            quad.push_back(*q);
        else
            quad.push_back(nullptr);
    }
    j["quadratic"] = std::move(quad);
    return j;
}

}  // namespace perispec
