#pragma once

#include <string>
#include <vector>

#include "qsym/graph.hpp"
#include "qsym/presentation.hpp"
#include "qsym/qmatrix.hpp"
#include "qsym/rewrite.hpp"

namespace qsym {

struct ModelError : std::runtime_error {
    explicit ModelError(const std::string& m) : std::runtime_error(m) {}
};

// Universal unitary quantum group twisted by an invertible matrix Q:
// generators u_ij with U^t* U^t = U^t U^t* = Id and
// U Q^{-1} U* Q = Q^{-1} U* Q U = Id, expanded entrywise.
inline Presentation aut_f(const QMatrix& Q, const std::string& prefix = "u") {
    if (Q.n != Q.m) throw ModelError("aut_f: Q must be square");
    QMatrix Qi = [&] {
        try {
            return Q.inverse();
        } catch (const std::invalid_argument&) {
            throw ModelError("aut_f: Q is singular");
        }
    }();
    int n = Q.n;
    Presentation p;
    p.name = "A_ut(Q)";
    add_matrix_generators(p.gens, prefix, n, n);
    auto u = [&](int i, int j, bool star) {
        return NCPoly::letter(p.gens.letter(p.gens.layout->entry(i, j), star));
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational delta(i == j ? 1 : 0);
            NCPoly tst, tts, uqu, quq; // U^t*U^t, U^tU^t*, UQ^{-1}U*Q, Q^{-1}U*QU
            for (int k = 0; k < n; ++k) {
                tst.add(u(i, k, true) * u(j, k, false));
                tts.add(u(k, i, false) * u(k, j, true));
            }
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int mm = 0; mm < n; ++mm) {
                        Rational c1 = Qi(k, l) * Q(mm, j);
                        if (!c1.is_zero()) uqu.add(u(i, k, false) * u(mm, l, true), c1);
                        Rational c2 = Qi(i, k) * Q(l, mm);
                        if (!c2.is_zero()) quq.add(u(l, k, true) * u(mm, j, false), c2);
                    }
            p.add_relation(tst - NCPoly::unit(delta));
            p.add_relation(tts - NCPoly::unit(delta));
            p.add_relation(uqu - NCPoly::unit(delta));
            p.add_relation(quq - NCPoly::unit(delta));
        }
    p.dedupe();
    p.coproduct = "Delta(" + prefix + "_ij) = sum_k " + prefix + "_ik (x) " + prefix + "_kj";
    p.provenance = "universal unitary quantum group twisted by Q";
    return p;
}

// Quantum permutation group S_n^+: a magic unitary of self-adjoint
// idempotents with row and column sums 1.
inline Presentation s_n_plus(int n) {
    if (n < 1) throw ModelError("s_n_plus: n must be positive");
    Presentation p;
    p.name = "S_" + std::to_string(n) + "_plus";
    add_matrix_generators(p.gens, "u", n, n, /*self_adjoint=*/true);
    auto u = [&](int i, int j) { return NCPoly::letter(p.gens.letter(p.gens.layout->entry(i, j), false)); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.add_relation(u(i, j) * u(i, j) - u(i, j));
    for (int i = 0; i < n; ++i) {
        NCPoly row, col;
        for (int k = 0; k < n; ++k) {
            row.add(u(i, k));
            col.add(u(k, i));
        }
        p.add_relation(row - NCPoly::unit());
        p.add_relation(col - NCPoly::unit());
    }
    p.dedupe();
    p.coproduct = "Delta(u_ij) = sum_k u_ik (x) u_kj";
    p.provenance = "quantum permutation group";
    return p;
}

// Quantum automorphism group of a loop-free, multi-edge-free directed graph:
// the magic unitary relations together with the vanishing products indexed by
// edges against non-edges.
inline Presentation banica(const Graph& g) {
    auto cls = classify(g);
    if (cls.has_loop) throw ModelError("banica: graph has a loop");
    if (cls.has_multi_edge) throw ModelError("banica: graph has a multiple edge");
    int m = g.vertex_count();
    auto d = adjacency_matrix(g);
    Presentation p;
    p.name = "Q_aut_Ban";
    add_matrix_generators(p.gens, "u", m, m, /*self_adjoint=*/true);
    auto u = [&](int i, int j) { return NCPoly::letter(p.gens.letter(p.gens.layout->entry(i, j), false)); };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                Rational delta(j == k ? 1 : 0);
                p.add_relation(u(i, j) * u(i, k) - delta * u(i, j));
                p.add_relation(u(j, i) * u(k, i) - delta * u(j, i));
            }
    for (int i = 0; i < m; ++i) {
        NCPoly row, col;
        for (int k = 0; k < m; ++k) {
            row.add(u(i, k));
            col.add(u(k, i));
        }
        p.add_relation(row - NCPoly::unit());
        p.add_relation(col - NCPoly::unit());
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int s = g.source(e), t = g.target(e);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                if (d[size_t(i)][size_t(k)] != 0) continue; // (i,k) is an edge
                p.add_relation(u(s, i) * u(t, k));
                p.add_relation(u(t, k) * u(s, i));
                p.add_relation(u(i, s) * u(k, t));
                p.add_relation(u(k, t) * u(i, s));
            }
    }
    p.dedupe();
    p.coproduct = "Delta(u_ij) = sum_k u_ik (x) u_kj";
    p.provenance = "quantum automorphism group of the directed graph";
    return p;
}

// Free product of n circle algebras: n unitary generators, no cross relations.
inline Presentation free_circles(int n) {
    if (n < 1) throw ModelError("free_circles: n must be positive");
    Presentation p;
    p.name = "free_circles_" + std::to_string(n);
    for (int i = 1; i <= n; ++i) p.gens.add("z_" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        NCPoly z = NCPoly::letter(p.gens.letter(i, false));
        NCPoly zs = NCPoly::letter(p.gens.letter(i, true));
        p.add_relation(zs * z - NCPoly::unit());
        p.add_relation(z * zs - NCPoly::unit());
    }
    p.coproduct = "Delta(z_i) = z_i (x) z_i";
    p.provenance = "free product of circle algebras";
    return p;
}

// Doubling along an order-2 automorphism theta (a generator permutation that
// must preserve the relations): two block copies of the input presentation
// glued with central projections iota_1, iota_2.
inline Presentation doubling(const Presentation& base, const std::vector<int>& theta,
                             Caps caps = {}) {
    int ng = base.gens.size();
    if (int(theta.size()) != ng) throw ModelError("doubling: theta must permute the generators");
    for (int i = 0; i < ng; ++i) {
        if (theta[size_t(i)] < 0 || theta[size_t(i)] >= ng)
            throw ModelError("doubling: theta out of range");
        if (theta[size_t(theta[size_t(i)])] != i)
            throw ModelError("doubling: theta is not an involution");
        if (base.gens.self_adjoint(i) != base.gens.self_adjoint(theta[size_t(i)]))
            throw ModelError("doubling: theta does not respect the involution");
    }
    // theta must send every relation to a provable relation
    RewriteSystem sys = complete(base.relations, base.gens, caps);
    std::vector<NCPoly> theta_images(size_t(ng), NCPoly{});
    for (int i = 0; i < ng; ++i)
        theta_images[size_t(i)] = NCPoly::letter(base.gens.letter(theta[size_t(i)], false));
    for (const auto& r : base.relations) {
        NCPoly img = r.substitute(base.gens, theta_images, base.gens);
        if (!sys.reduce(img).zero())
            throw ModelError("doubling: theta does not preserve relation '" + r.str(base.gens) + "'");
    }

    Presentation p;
    p.name = "doubling(" + base.name + ")";
    int iota1 = p.gens.add("iota_1", true);
    int iota2 = p.gens.add("iota_2", true);
    std::vector<std::vector<int>> copy(2, std::vector<int>(size_t(ng), 0));
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < ng; ++i)
            copy[size_t(a)][size_t(i)] =
                p.gens.add(base.gens.name(i) + "_" + std::to_string(a + 1), base.gens.self_adjoint(i));

    auto iota = [&](int a) { return NCPoly::letter(p.gens.letter(a == 0 ? iota1 : iota2, false)); };
    // iota_a are orthogonal idempotents summing to 1
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            p.add_relation(iota(a) * iota(b) - Rational(a == b ? 1 : 0) * iota(a));
    p.add_relation(iota(0) + iota(1) - NCPoly::unit());

    // each copy satisfies the base relations with the unit replaced by its iota
    for (int a = 0; a < 2; ++a) {
        for (const auto& r : base.relations) {
            NCPoly out;
            for (const auto& [w, c] : r.terms()) {
                if (w.empty()) {
                    out.add(iota(a), c);
                    continue;
                }
                Word img;
                for (Letter l : w)
                    img.push_back(p.gens.letter(copy[size_t(a)][size_t(letter_gen(l))], letter_star(l)));
                out.add_term(img, c);
            }
            p.add_relation(out);
        }
        // block structure: iota_b g_a = g_a iota_b = delta_ab g_a
        for (int i = 0; i < ng; ++i) {
            NCPoly gja = NCPoly::letter(p.gens.letter(copy[size_t(a)][size_t(i)], false));
            for (int b = 0; b < 2; ++b) {
                Rational delta(a == b ? 1 : 0);
                p.add_relation(iota(b) * gja - delta * gja);
                p.add_relation(gja * iota(b) - delta * gja);
            }
        }
    }
    // cross products between the two copies vanish
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < ng; ++j)
            for (bool si : {false, true})
                for (bool sj : {false, true}) {
                    NCPoly x = NCPoly::letter(p.gens.letter(copy[0][size_t(i)], si));
                    NCPoly y = NCPoly::letter(p.gens.letter(copy[1][size_t(j)], sj));
                    p.add_relation(x * y);
                    p.add_relation(y * x);
                }
    p.dedupe();
    p.coproduct =
        "Dtilde o xi = (xi (x) xi + eta (x) [eta o theta]) o Delta ; "
        "Dtilde o eta = (xi (x) eta + eta (x) [xi o theta]) o Delta";
    p.provenance = "doubling of " + base.name + " along an order-2 automorphism";
    return p;
}

} // namespace qsym
