#pragma once

#include <string>
#include <vector>

#include "qsym/qsym.hpp"

namespace qsym::testing {

// P_n: n consecutive edges v0 -> v1 -> ... -> vn
inline Graph path_graph(int n) {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int v = 0; v <= n; ++v) vs.push_back("v" + std::to_string(v));
    for (int e = 1; e <= n; ++e)
        es.push_back({"e" + std::to_string(e), "v" + std::to_string(e - 1), "v" + std::to_string(e)});
    return Graph::build(vs, es);
}

// L_n: n loops on a single vertex (the graph of the Cuntz algebra O_n)
inline Graph loop_graph(int n) {
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) es.push_back({"e" + std::to_string(i), "v", "v"});
    return Graph::build({"v"}, es);
}

// complete directed graph on two vertices
inline Graph k2_graph() {
    return Graph::build({"a", "b"}, {{"e1", "a", "b"}, {"e2", "b", "a"}});
}

// directed four-cycle
inline Graph c4_graph() {
    return Graph::build({"a", "b", "c", "d"},
                        {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "d"}, {"e4", "d", "a"}});
}

inline NCPoly rel(const Presentation& p, const std::string& expr) {
    return parse_expr(expr, p.gens);
}

inline bool has_relation(const Presentation& p, const std::string& expr) {
    NCPoly want = parse_expr(expr, p.gens).monic();
    for (const auto& r : p.relations)
        if (r == want || r == (-want).monic()) return true;
    return false;
}

} // namespace qsym::testing
