#pragma once

#include "perispec/graph.hpp"
#include "perispec/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perispec {

// Ring of nu vertices; the wrap-around edge carries index 1. For nu = 2 the
// two declarations fold into a double edge.
FundamentalGraph builtin_cycle(int nu);

// One-dimensional lattice with a pendant vertex: vertex 0 carries a loop of
// index 1 and the bond to the dangling vertex 1.
FundamentalGraph builtin_pendant();

// Kagome lattice fundamental graph: three vertices, six edge declarations, two
// parallel paths between each vertex pair, degree 4 throughout.
FundamentalGraph builtin_kagome();

// Token grammar: "pendant", "kagome", "cycle:NU", "zd:P1,P2,...". Returns
// nullopt when the leading name is not a builtin; throws on a builtin name
// with malformed parameters.
std::optional<FundamentalGraph> parse_builtin_token(const std::string& token);

// Argument-list form used by the CLI, e.g. {"zd", "3,3"} or {"cycle", "5"}.
FundamentalGraph build_builtin(const std::vector<std::string>& args);

}  // namespace perispec
