#pragma once

#include "perispec/cycles.hpp"
#include "perispec/floquet.hpp"
#include "perispec/invariants.hpp"
#include "perispec/lattice.hpp"

#include <json.hpp>

namespace perispec {

using Json = nlohmann::ordered_json;

// Polynomial: array of {"coeff": "a/b", "exps": [e0, ...]} in graded-lex order.
Json to_json(const PotentialPolynomial& p);
Json to_json(const ComplexRational& z);   // {"re": "a/b", "im": "c/d"}
Json to_json(const Cycle& c);
Json to_json(const ClosedPath& p);
Json to_json(const InvariantTable& t);
Json to_json(const TraceReport& r);
Json to_json(const IsospectralResult& r);
Json to_json(const LinearQuadraticResult& r);
Json to_json(const FourierInvariantValues& v);

// "1" for the empty monomial, otherwise "q0^1*q2^2" with explicit exponents.
std::string weight_to_string(const Monomial& w);

}  // namespace perispec
