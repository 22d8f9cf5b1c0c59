#pragma once

#include <string>
#include <vector>

#include "qsym/cstar.hpp"
#include "qsym/graph.hpp"
#include "qsym/qmatrix.hpp"
#include "qsym/rep.hpp"

namespace qsym {

// All directed paths that end at a sink, including the length-zero path at
// each sink. Deterministic order: by start vertex, then edge choices.
struct PathBasis {
    // each path: list of edge indices; start vertex stored alongside
    std::vector<std::pair<int, std::vector<int>>> paths;

    int find(int start, const std::vector<int>& edges) const {
        for (size_t i = 0; i < paths.size(); ++i)
            if (paths[i].first == start && paths[i].second == edges) return int(i);
        return -1;
    }
};

inline void collect_paths(const Graph& g, int v, std::vector<int>& prefix, int start,
                          PathBasis& out) {
    if (g.is_sink(v)) out.paths.push_back({start, prefix});
    for (int e : g.edges_from(v)) {
        prefix.push_back(e);
        collect_paths(g, g.target(e), prefix, start, out);
        prefix.pop_back();
    }
}

inline PathBasis path_basis(const Graph& g) {
    PathBasis b;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> prefix;
        collect_paths(g, v, prefix, v, b);
    }
    return b;
}

// Finite-dimensional model of C*(Gamma) for acyclic graphs on the span of
// paths ending at a sink: S_e prepends e where composable, p_v projects onto
// paths starting at v. All defining relations hold with integer matrices.
inline MatrixRep path_space_rep(const Graph& g) {
    if (!classify(g).acyclic)
        throw std::invalid_argument("no finite-dimensional path-space model: graph has a cycle");
    PathBasis basis = path_basis(g);
    int d = int(basis.paths.size());
    MatrixRep rep;
    rep.dim = d;
    for (int e = 0; e < g.edge_count(); ++e) {
        CMatrix m(d, d);
        for (int col = 0; col < d; ++col) {
            const auto& [start, edges] = basis.paths[size_t(col)];
            if (start != g.target(e)) continue;
            std::vector<int> extended;
            extended.push_back(e);
            extended.insert(extended.end(), edges.begin(), edges.end());
            int row = basis.find(g.source(e), extended);
            if (row >= 0) m(row, col) = 1.0;
        }
        rep.matrices["S_" + g.edge(e).id] = m;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        CMatrix m(d, d);
        for (int col = 0; col < d; ++col)
            if (basis.paths[size_t(col)].first == v) m(col, col) = 1.0;
        rep.matrices["p_" + g.vertex_id(v)] = m;
    }
    return rep;
}

// Evaluate a monomial in the path-space model (integer entries, exact).
inline CMatrix eval_cmon(const Graph& g, const MatrixRep& rep, const CMon& m) {
    CMatrix acc = CMatrix::identity(rep.dim);
    if (m.is_unit()) return acc;
    if (m.is_vertex_projection()) return rep.matrix("p_" + g.vertex_id(m.base));
    for (int e : m.left) acc = acc * rep.matrix("S_" + g.edge(e).id);
    CMatrix right = CMatrix::identity(rep.dim);
    for (int e : m.right) right = right * rep.matrix("S_" + g.edge(e).id);
    return acc * right.adjoint();
}

inline CMatrix eval_ccombo(const Graph& g, const MatrixRep& rep, const CCombo& x) {
    CMatrix acc = CMatrix::zeros(rep.dim, rep.dim);
    for (const auto& [m, c] : x.terms())
        acc = acc + eval_cmon(g, rep, m).scaled(cplx(c.to_double(), 0.0));
    return acc;
}

struct RankReport {
    int basis_size = 0;
    int gram_rank = 0;
    bool full_rank = false;
    int dimension = 0;
};

// Numerical check that {S_i S_j*, sink projections} is linearly independent:
// images under the path-space model have a full-rank Gram matrix. The model
// has integer matrices, so the rank is computed exactly over the rationals.
inline RankReport check_basis_independence(const Graph& g) {
    if (!classify(g).acyclic)
        throw std::invalid_argument("not checkable numerically: graph has a cycle");
    MatrixRep rep = path_space_rep(g);
    V2PlusBasis b = v2plus_basis(g);
    std::vector<CMatrix> images;
    for (auto [i, j] : b.pair_set)
        images.push_back(eval_cmon(g, rep, CMon{{i}, {j}, g.target(i)}));
    for (int v : b.sink_list) images.push_back(eval_cmon(g, rep, CMon::vertex(v)));

    int n = int(images.size());
    QMatrix gram(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            double v = 0;
            for (size_t k = 0; k < images[size_t(r)].a.size(); ++k)
                v += (images[size_t(r)].a[k] * std::conj(images[size_t(c)].a[k])).real();
            gram(r, c) = Rational((long long)std::llround(v)); // entries are integers
        }
    RankReport rr;
    rr.basis_size = n;
    rr.gram_rank = gram.rank();
    rr.full_rank = rr.gram_rank == n;
    rr.dimension = rep.dim;
    return rr;
}

} // namespace qsym
