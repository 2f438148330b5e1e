#include "perispec/builtins.hpp"

#include <sstream>
#include <stdexcept>

namespace perispec {

namespace {

FundamentalGraph from_text(const std::string& text) {
    return parse_graph(text).graph;
}

std::vector<int> parse_period_list(const std::string& s) {
    std::vector<int> periods;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int p = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad period '" + item + "'");
        periods.push_back(p);
    }
    if (periods.empty()) throw std::invalid_argument("empty period list");
    return periods;
}

}  // namespace

FundamentalGraph builtin_cycle(int nu) {
    if (nu < 1) throw std::invalid_argument("cycle graph needs at least one vertex");
    std::ostringstream text;
    text << "dim 1\nvertices " << nu << "\n";
    for (int v = 0; v < nu; ++v) {
        bool wraps = (v == nu - 1);
        text << "edge " << v << " " << (wraps ? 0 : v + 1) << " " << (wraps ? 1 : 0) << "\n";
    }
    return from_text(text.str());
}

FundamentalGraph builtin_pendant() {
    return from_text(
        "dim 1\n"
        "vertices 2\n"
        "edge 0 1 0\n"
        "edge 0 0 1\n");
}

FundamentalGraph builtin_kagome() {
    return from_text(
        "dim 2\n"
        "vertices 3\n"
        "edge 0 1 0 0\n"
        "edge 1 0 1 0\n"
        "edge 0 2 0 0\n"
        "edge 2 0 0 1\n"
        "edge 2 1 0 0\n"
        "edge 1 2 1 -1\n");
}

std::optional<FundamentalGraph> parse_builtin_token(const std::string& token) {
    std::string name = token;
    std::string param;
    if (auto colon = token.find(':'); colon != std::string::npos) {
        name = token.substr(0, colon);
        param = token.substr(colon + 1);
    }
    if (name == "pendant" || name == "kagome") {
        if (!param.empty())
            throw std::invalid_argument("builtin '" + name + "' takes no parameters");
        return name == "pendant" ? builtin_pendant() : builtin_kagome();
    }
    if (name == "cycle") {
        if (param.empty()) throw std::invalid_argument("builtin 'cycle' needs a vertex count");
        size_t pos = 0;
        int nu = std::stoi(param, &pos);
        if (pos != param.size()) throw std::invalid_argument("bad vertex count '" + param + "'");
        return builtin_cycle(nu);
    }
    if (name == "zd") {
        if (param.empty()) throw std::invalid_argument("builtin 'zd' needs a period list");
        return build_zd(ZdSpec{parse_period_list(param)});
    }
    return std::nullopt;
}

FundamentalGraph build_builtin(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("missing builtin name");
    std::string token = args[0];
    if (args.size() == 2) token += ":" + args[1];
    if (args.size() > 2) throw std::invalid_argument("too many builtin arguments");
    auto g = parse_builtin_token(token);
    if (!g) throw std::invalid_argument("unknown builtin '" + args[0] + "'");
    return *g;
}

}  // namespace perispec
