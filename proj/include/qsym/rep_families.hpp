#pragma once

#include <random>
#include <string>

#include "qsym/graph.hpp"
#include "qsym/pathspace.hpp"
#include "qsym/rep.hpp"

namespace qsym {

// Block model of the two-cycle quantum symmetry: independent Haar unitaries
// Z1, Z2 placed on the two corners of a 2d-dimensional space,
//   q_11 = diag(Z1, 0), q_12 = diag(0, Z1), q_21 = diag(0, Z2), q_22 = diag(Z2, 0).
inline MatrixRep k2_doubling_rep(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x1234567ULL);
    CMatrix z1 = haar_unitary(d, rng);
    CMatrix z2 = haar_unitary(d, rng);
    auto corner = [&](const CMatrix& z, bool upper) {
        CMatrix m(2 * d, 2 * d);
        int off = upper ? 0 : d;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(off + i, off + j) = z(i, j);
        return m;
    };
    MatrixRep rep;
    rep.dim = 2 * d;
    rep.seed = seed;
    rep.matrices["q_1_1"] = corner(z1, true);
    rep.matrices["q_1_2"] = corner(z1, false);
    rep.matrices["q_2_1"] = corner(z2, false);
    rep.matrices["q_2_2"] = corner(z2, true);
    return rep;
}

// Same blocks, addressed by the doubling presentation's generator names.
inline MatrixRep doubling_block_rep(int d, std::uint64_t seed) {
    MatrixRep k2 = k2_doubling_rep(d, seed);
    MatrixRep rep;
    rep.dim = k2.dim;
    rep.seed = seed;
    CMatrix i1(2 * d, 2 * d), i2(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        i1(i, i) = 1.0;
        i2(d + i, d + i) = 1.0;
    }
    rep.matrices["iota_1"] = i1;
    rep.matrices["iota_2"] = i2;
    rep.matrices["z_1_1"] = k2.matrices["q_1_1"];
    rep.matrices["z_1_2"] = k2.matrices["q_1_2"];
    rep.matrices["z_2_1"] = k2.matrices["q_2_2"];
    rep.matrices["z_2_2"] = k2.matrices["q_2_1"];
    return rep;
}

// Diagonal model for an n x n layout: q_ii independent Haar unitaries,
// q_ij = 0 off the diagonal.
inline MatrixRep path_diagonal_rep(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x7654321ULL);
    MatrixRep rep;
    rep.dim = d;
    rep.seed = seed;
    for (int i = 1; i <= n; ++i) {
        CMatrix u = haar_unitary(d, rng);
        for (int j = 1; j <= n; ++j) {
            std::string name = "q_" + std::to_string(i) + "_" + std::to_string(j);
            rep.matrices[name] = (i == j) ? u : CMatrix::zeros(d, d);
        }
    }
    return rep;
}

// One-dimensional model: q_ij are the entries of a Haar-random scalar unitary.
inline MatrixRep cuntz_classical_rep(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xabcdefULL);
    CMatrix u = haar_unitary(n, rng);
    MatrixRep rep;
    rep.dim = 1;
    rep.seed = seed;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            CMatrix m(1, 1);
            m(0, 0) = u(i - 1, j - 1);
            rep.matrices["q_" + std::to_string(i) + "_" + std::to_string(j)] = m;
        }
    return rep;
}

// Classical point of the quantum automorphism group: u_ij = [sigma(j) = i]
// for a chosen graph automorphism sigma.
inline MatrixRep banica_classical_rep(const Graph& g, const std::vector<int>& sigma) {
    int m = g.vertex_count();
    MatrixRep rep;
    rep.dim = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            CMatrix mat(1, 1);
            mat(0, 0) = (sigma[size_t(j)] == i) ? 1.0 : 0.0;
            rep.matrices["u_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = mat;
        }
    return rep;
}

// Dispatch by family name. `d` and `seed` are ignored where meaningless.
inline MatrixRep builtin_rep(const std::string& name, const Graph& g, int d, std::uint64_t seed) {
    if (name == "k2-doubling") {
        if (g.edge_count() != 2 || g.vertex_count() != 2 || g.source(0) == g.target(0) ||
            g.source(0) != g.target(1) || g.target(0) != g.source(1))
            throw RepError("k2-doubling needs the complete graph on two vertices");
        return k2_doubling_rep(d, seed);
    }
    if (name == "path-diagonal") return path_diagonal_rep(g.edge_count(), d, seed);
    if (name == "cuntz-classical") return cuntz_classical_rep(g.edge_count(), seed);
    if (name == "banica-classical") {
        auto auts = classical_automorphisms(g);
        return banica_classical_rep(g, auts[size_t(seed % auts.size())]);
    }
    if (name == "graph-pathspace") return path_space_rep(g);
    throw RepError("unknown representation family '" + name + "'");
}

} // namespace qsym
