#include <doctest.h>

#include <functional>
#include <set>

#include "helpers.hpp"

using namespace qsym;
using namespace qsym::testing;

TEST_CASE("parsing the sample graphs") {
    Graph k2 = Graph::parse("edge e1 a b\nedge e2 b a\n");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 2);
    CHECK(k2.vertex_id(0) == "a");

    Graph p2 = Graph::parse("# a path\nedge e1 v0 v1\nedge e2 v1 v2\n");
    CHECK(p2.vertex_count() == 3);
    CHECK(p2.edge_count() == 2);
    CHECK(p2.source(1) == 1);
    CHECK(p2.target(1) == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(Graph::parse("vertex c\nedge e1 a b\n"),
                         doctest::Contains("not connected"), GraphError);
    CHECK_THROWS_AS(Graph::parse(""), GraphError);                            // empty edge set
    CHECK_THROWS_AS(Graph::parse("vertex a\nvertex a\nedge e a a\n"), GraphError); // duplicate
    CHECK_THROWS_AS(Graph::parse("edge e1 a b\nedge e1 b a\n"), GraphError);  // duplicate edge
    CHECK_THROWS_AS(Graph::parse("edge e1 a\n"), GraphError);                 // syntax
    CHECK_THROWS_AS(Graph::parse("edgee e1 a b\n"), GraphError);              // keyword
    try {
        Graph::parse("edge e1 a b\nedge e2 a\n");
        CHECK(false);
    } catch (const GraphError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse of serialize is the identity") {
    for (const Graph& g : {k2_graph(), path_graph(3), loop_graph(2), c4_graph()}) {
        Graph back = Graph::parse(g.serialize());
        CHECK(back.serialize() == g.serialize());
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = random_connected_graph(seed);
        CHECK(Graph::parse(g.serialize()).serialize() == g.serialize());
    }
}

TEST_CASE("classification of the samples") {
    auto l2 = classify(loop_graph(2));
    CHECK(l2.has_loop);
    CHECK(l2.has_multi_edge);
    CHECK(l2.sinks.empty());
    CHECK_FALSE(l2.acyclic);

    auto p2 = classify(path_graph(2));
    CHECK_FALSE(p2.has_loop);
    CHECK(p2.acyclic);
    CHECK(p2.sinks == std::vector<int>{2});
    CHECK(p2.sources_only == std::vector<int>{0});

    auto k2 = classify(k2_graph());
    CHECK_FALSE(k2.acyclic); // the two edges form a cycle
    CHECK(k2.sinks.empty());
}

// independent depth-first cycle oracle for random graphs
static bool has_cycle_oracle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> state(size_t(n), 0);
    std::function<bool(int)> dfs = [&](int v) {
        state[size_t(v)] = 1;
        for (int e : g.edges_from(v)) {
            int w = g.target(e);
            if (state[size_t(w)] == 1) return true;
            if (state[size_t(w)] == 0 && dfs(w)) return true;
        }
        state[size_t(v)] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[size_t(v)] == 0 && dfs(v)) return true;
    return false;
}

TEST_CASE("cycle detection matches a recursive oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_connected_graph(seed);
        CHECK(classify(g).acyclic == !has_cycle_oracle(g));
    }
}

TEST_CASE("adjacency matrices") {
    auto k2 = adjacency_matrix(k2_graph());
    CHECK(k2 == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    auto p2 = adjacency_matrix(path_graph(2));
    CHECK(p2 == std::vector<std::vector<long long>>{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    auto l2 = adjacency_matrix(loop_graph(2));
    CHECK(l2 == std::vector<std::vector<long long>>{{2}});

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_connected_graph(seed);
        auto d = adjacency_matrix(g);
        for (int i = 0; i < g.vertex_count(); ++i) {
            long long row = 0, direct = 0;
            for (int j = 0; j < g.vertex_count(); ++j) row += d[size_t(i)][size_t(j)];
            for (int e = 0; e < g.edge_count(); ++e)
                if (g.source(e) == i) ++direct;
            CHECK(row == g.out_degree(i));
            CHECK(row == direct);
        }
    }
}

TEST_CASE("classical automorphism groups of the samples") {
    CHECK(classical_automorphisms(k2_graph()).size() == 2);
    CHECK(classical_automorphisms(path_graph(3)).size() == 1);
    CHECK(classical_automorphisms(c4_graph()).size() == 4);
}

TEST_CASE("automorphisms form a group and permute edges") {
    for (const Graph& g : {k2_graph(), path_graph(2), c4_graph(), loop_graph(2)}) {
        auto auts = classical_automorphisms(g);
        std::set<std::vector<int>> set(auts.begin(), auts.end());
        std::vector<int> id(size_t(g.vertex_count()), 0);
        for (int i = 0; i < g.vertex_count(); ++i) id[size_t(i)] = i;
        CHECK(set.count(id) == 1);
        for (const auto& a : auts) {
            std::vector<int> inv(a.size(), 0);
            for (size_t i = 0; i < a.size(); ++i) inv[size_t(a[i])] = int(i);
            CHECK(set.count(inv) == 1);
            for (const auto& b : auts) {
                std::vector<int> comp(a.size(), 0);
                for (size_t i = 0; i < a.size(); ++i) comp[i] = a[size_t(b[i])];
                CHECK(set.count(comp) == 1);
            }
            // the induced edge map is a bijection: multiplicities match
            for (int e = 0; e < g.edge_count(); ++e) {
                int s = a[size_t(g.source(e))], t = a[size_t(g.target(e))];
                int count = 0;
                for (int f = 0; f < g.edge_count(); ++f)
                    if (g.source(f) == s && g.target(f) == t) ++count;
                CHECK(count >= 1);
            }
        }
    }
}

TEST_CASE("automorphism cap") {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    for (int i = 0; i < 12; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < 11; ++i)
        es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
    Graph big = Graph::build(vs, es);
    CHECK_THROWS_WITH_AS(classical_automorphisms(big), doctest::Contains("too large"),
                         std::invalid_argument);
}
