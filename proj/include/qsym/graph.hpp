#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

struct GraphError : std::runtime_error {
    int line = 0;
    int col = 0;
    GraphError(const std::string& msg, int l = 0, int c = 0)
        : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg
                                   : msg),
          line(l), col(c) {}
};

// Finite directed multigraph. Vertex and edge order is declaration order and
// every matrix index below refers to that order. Connectedness is the weak
// condition that every vertex meets at least one edge.
class Graph {
public:
    struct Edge {
        std::string id;
        int src;
        int dst;
    };

    static Graph parse(const std::string& text) {
        Graph g;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::vector<std::pair<std::string, int>> tok = tokenize(line, lineno);
            if (tok.empty()) continue;
            const std::string& kw = tok[0].first;
            if (kw == "vertex") {
                if (tok.size() != 2) throw GraphError("expected: vertex <id>", lineno, tok[0].second);
                g.declare_vertex(tok[1].first, lineno, tok[1].second);
            } else if (kw == "edge") {
                if (tok.size() != 4)
                    throw GraphError("expected: edge <id> <src> <tgt>", lineno, tok[0].second);
                g.declare_edge(tok[1].first, tok[2].first, tok[3].first, lineno, tok[1].second);
            } else {
                throw GraphError("unknown keyword '" + kw + "'", lineno, tok[0].second);
            }
        }
        g.validate();
        return g;
    }

    std::string serialize() const {
        std::string out;
        for (const auto& v : vertices_) out += "vertex " + v + "\n";
        for (const auto& e : edges_)
            out += "edge " + e.id + " " + vertices_[size_t(e.src)] + " " + vertices_[size_t(e.dst)] + "\n";
        return out;
    }

    int vertex_count() const { return int(vertices_.size()); }
    int edge_count() const { return int(edges_.size()); }
    const std::string& vertex_id(int v) const { return vertices_.at(size_t(v)); }
    const Edge& edge(int e) const { return edges_.at(size_t(e)); }
    int source(int e) const { return edges_.at(size_t(e)).src; }
    int target(int e) const { return edges_.at(size_t(e)).dst; }

    int vertex_index(const std::string& id) const {
        auto it = vindex_.find(id);
        return it == vindex_.end() ? -1 : it->second;
    }
    int edge_index(const std::string& id) const {
        auto it = eindex_.find(id);
        return it == eindex_.end() ? -1 : it->second;
    }

    std::vector<int> edges_from(int v) const {
        std::vector<int> out;
        for (int e = 0; e < edge_count(); ++e)
            if (edges_[size_t(e)].src == v) out.push_back(e);
        return out;
    }
    std::vector<int> edges_into(int v) const {
        std::vector<int> out;
        for (int e = 0; e < edge_count(); ++e)
            if (edges_[size_t(e)].dst == v) out.push_back(e);
        return out;
    }
    int out_degree(int v) const { return int(edges_from(v).size()); }
    bool is_sink(int v) const { return out_degree(v) == 0; }

    // In-code construction helper for tests and generators.
    static Graph build(const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
        Graph g;
        for (const auto& v : vertices) g.declare_vertex(v, 0, 0);
        for (const auto& [id, s, t] : edges) g.declare_edge(id, s, t, 0, 0);
        g.validate();
        return g;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vindex_;
    std::map<std::string, int> eindex_;

    static std::vector<std::pair<std::string, int>> tokenize(const std::string& line, int lineno) {
        std::vector<std::pair<std::string, int>> out;
        size_t i = 0;
        while (i < line.size()) {
            if (std::isspace((unsigned char)line[i])) { ++i; continue; }
            size_t start = i;
            while (i < line.size() && !std::isspace((unsigned char)line[i])) ++i;
            std::string t = line.substr(start, i - start);
            for (char c : t)
                if (!std::isalnum((unsigned char)c) && c != '_')
                    throw GraphError("invalid character in identifier '" + t + "'", lineno,
                                     int(start) + 1);
            out.push_back({t, int(start) + 1});
        }
        return out;
    }

    int declare_vertex(const std::string& id, int lineno, int col, bool implicit = false) {
        auto it = vindex_.find(id);
        if (it != vindex_.end()) {
            if (!implicit) {
                if (declared_.count(id))
                    throw GraphError("duplicate vertex id '" + id + "'", lineno, col);
                declared_.insert(id);
            }
            return it->second;
        }
        int idx = int(vertices_.size());
        vertices_.push_back(id);
        vindex_[id] = idx;
        if (!implicit) declared_.insert(id);
        return idx;
    }

    void declare_edge(const std::string& id, const std::string& s, const std::string& t, int lineno,
                      int col) {
        if (eindex_.count(id)) throw GraphError("duplicate edge id '" + id + "'", lineno, col);
        int si = declare_vertex(s, lineno, col, true);
        int ti = declare_vertex(t, lineno, col, true);
        eindex_[id] = int(edges_.size());
        edges_.push_back({id, si, ti});
    }

    void validate() const {
        if (edges_.empty()) throw GraphError("empty edge set");
        for (int v = 0; v < vertex_count(); ++v) {
            bool incident = false;
            for (const auto& e : edges_)
                if (e.src == v || e.dst == v) { incident = true; break; }
            if (!incident)
                throw GraphError("not connected: vertex '" + vertices_[size_t(v)] +
                                 "' is neither a source nor a target of any edge");
        }
    }

    std::set<std::string> declared_;
};

struct GraphClassification {
    bool has_loop = false;
    bool has_multi_edge = false;
    bool acyclic = true;
    std::vector<int> sinks;        // s^{-1}(v) empty
    std::vector<int> sources_only; // t^{-1}(v) empty
};

inline GraphClassification classify(const Graph& g) {
    GraphClassification c;
    std::map<std::pair<int, int>, int> mult;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.source(e) == g.target(e)) c.has_loop = true;
        if (++mult[{g.source(e), g.target(e)}] > 1) c.has_multi_edge = true;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.edges_from(v).empty()) c.sinks.push_back(v);
        if (g.edges_into(v).empty()) c.sources_only.push_back(v);
    }
    // iterative three-color cycle search
    std::vector<int> color(size_t(g.vertex_count()), 0);
    for (int start = 0; start < g.vertex_count() && c.acyclic; ++start) {
        if (color[size_t(start)] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{start, 0}};
        color[size_t(start)] = 1;
        while (!stack.empty() && c.acyclic) {
            auto& [v, i] = stack.back();
            auto outs = g.edges_from(v);
            if (i >= outs.size()) {
                color[size_t(v)] = 2;
                stack.pop_back();
                continue;
            }
            int w = g.target(outs[i++]);
            if (color[size_t(w)] == 1) c.acyclic = false;
            else if (color[size_t(w)] == 0) {
                color[size_t(w)] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return c;
}

// Entry (i,j) counts edges v_i -> v_j (multiplicity-aware).
inline std::vector<std::vector<long long>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<long long>> d(size_t(g.vertex_count()),
                                          std::vector<long long>(size_t(g.vertex_count()), 0));
    for (int e = 0; e < g.edge_count(); ++e) d[size_t(g.source(e))][size_t(g.target(e))]++;
    return d;
}

// Exhaustive enumeration of vertex permutations commuting with the adjacency
// matrix. sigma[i] is the image of vertex i.
inline std::vector<std::vector<int>> classical_automorphisms(const Graph& g, int cap = 10) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("too large for brute force (vertex count " +
                                    std::to_string(g.vertex_count()) + " > cap " +
                                    std::to_string(cap) + ")");
    auto d = adjacency_matrix(g);
    int m = g.vertex_count();
    std::vector<int> sigma(size_t(m), 0);
    for (int i = 0; i < m; ++i) sigma[size_t(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < m && ok; ++j)
                if (d[size_t(sigma[size_t(i)])][size_t(sigma[size_t(j)])] != d[size_t(i)][size_t(j)])
                    ok = false;
        if (ok) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

// Seeded generator of small connected graphs (at most max_edges edges). Half
// the draws orient every edge forward, so acyclic graphs appear regularly.
inline Graph random_connected_graph(std::uint64_t seed, int max_edges = 6) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int ne = 1 + int(rng() % std::uint64_t(max_edges));
        bool forward = (rng() & 1) != 0;
        int nv = forward ? 2 + int(rng() % std::uint64_t(ne)) : 1 + int(rng() % std::uint64_t(ne + 1));
        std::vector<std::tuple<std::string, std::string, std::string>> edges;
        std::vector<bool> incident(size_t(nv), false);
        for (int e = 0; e < ne; ++e) {
            int s, t;
            if (forward) {
                s = int(rng() % std::uint64_t(nv - 1));
                t = s + 1 + int(rng() % std::uint64_t(nv - 1 - s));
            } else {
                s = int(rng() % std::uint64_t(nv));
                t = int(rng() % std::uint64_t(nv));
            }
            incident[size_t(s)] = incident[size_t(t)] = true;
            edges.push_back({"e" + std::to_string(e + 1), "v" + std::to_string(s + 1),
                             "v" + std::to_string(t + 1)});
        }
        bool ok = true;
        for (bool b : incident) ok = ok && b;
        if (!ok) continue;
        std::vector<std::string> verts;
        for (int v = 0; v < nv; ++v) verts.push_back("v" + std::to_string(v + 1));
        return Graph::build(verts, edges);
    }
    return Graph::build({"a", "b"}, {{"e1", "a", "b"}});
}

} // namespace qsym
