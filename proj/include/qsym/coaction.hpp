#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/cstar.hpp"
#include "qsym/presentations.hpp"
#include "qsym/prove.hpp"

namespace qsym {

// Symbolic linear coaction on C*(Gamma): alpha(S_e) is a sum of
// S_{e'} (x) (polynomial in the target generators); vertex formulas are
// carried explicitly so sinks and non-sinks follow one code path.
struct CoactionSpec {
    const Graph* graph = nullptr;
    Presentation target;
    std::string tag; // generic-linear | banica | diagonal-free
    // alpha(S_e) = sum over (edge, right leg)
    std::vector<std::vector<std::pair<int, NCPoly>>> edge_formula;
    // alpha(p_v) = sum over (monomial, right leg)
    std::vector<std::vector<std::pair<CMon, NCPoly>>> vertex_formula;
};

using TensorCombo = std::map<CMon, NCPoly>;

namespace detail {

inline void tensor_add(TensorCombo& t, const CMon& m, const NCPoly& p) {
    if (p.zero()) return;
    auto it = t.find(m);
    if (it == t.end()) t.emplace(m, p);
    else {
        it->second.add(p);
        if (it->second.zero()) t.erase(it);
    }
}

} // namespace detail

// Multiplicative extension of the spec over one word of the graph alphabet.
inline TensorCombo expand_word(const CoactionSpec& spec, const std::vector<CLetter>& letters) {
    const Graph& g = *spec.graph;
    TensorCombo acc;
    acc.emplace(CMon::unit(), NCPoly::unit());
    for (const auto& l : letters) {
        std::vector<std::pair<CMon, NCPoly>> comps;
        switch (l.kind) {
        case CLetter::S:
            for (const auto& [j, poly] : spec.edge_formula[size_t(l.idx)])
                comps.push_back({CMon{{j}, {}, g.target(j)}, poly});
            break;
        case CLetter::Sstar:
            for (const auto& [j, poly] : spec.edge_formula[size_t(l.idx)])
                comps.push_back({CMon{{}, {j}, g.target(j)}, poly.star(spec.target.gens)});
            break;
        case CLetter::P:
            comps = spec.vertex_formula[size_t(l.idx)];
            break;
        }
        TensorCombo next;
        for (const auto& [m, r] : acc)
            for (const auto& [mc, rc] : comps) {
                auto prod = cmul(g, m, mc);
                if (!prod) continue;
                detail::tensor_add(next, *prod, r * rc);
            }
        acc = std::move(next);
    }
    return acc;
}

// Expands a polynomial over the graph-algebra generators and collects right
// legs per left normal-form monomial. depth 0 keeps the structural normal
// form; depth > 0 expands left legs to the common depth basis.
inline TensorCombo expand(const CoactionSpec& spec, const NCPoly& x, int depth) {
    const Graph& g = *spec.graph;
    TensorCombo collected;
    for (const auto& [w, c] : x.terms()) {
        TensorCombo tw = expand_word(spec, cletters_of_word(g, w));
        for (const auto& [m, r] : tw) detail::tensor_add(collected, m, c * r);
    }
    if (depth <= 0) return collected;
    TensorCombo out;
    for (const auto& [m, r] : collected) {
        CCombo nf = normal_form(g, CCombo::of(m), depth);
        for (const auto& [m2, c2] : nf.terms()) detail::tensor_add(out, m2, c2 * r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named coaction specs

// Fresh n x n generator array q with alpha(S_i) = sum_j S_j (x) q_ji.
// Vertex formulas follow the derivation rule: non-sinks through
// sum_{s(e)=v} S_e S_e*, sinks through S_e* S_e for the lowest edge into v.
inline CoactionSpec generic_coaction(const Graph& g) {
    int n = g.edge_count();
    CoactionSpec spec;
    spec.graph = &g;
    spec.tag = "generic-linear";
    spec.target.name = "generic-linear-target";
    add_matrix_generators(spec.target.gens, "q", n, n);
    auto q = [&](int j, int i, bool star) {
        return NCPoly::letter(spec.target.gens.letter(spec.target.gens.layout->entry(j, i), star));
    };
    spec.edge_formula.resize(size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) spec.edge_formula[size_t(i)].push_back({j, q(j, i, false)});

    spec.vertex_formula.resize(size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        TensorCombo t;
        if (!g.is_sink(v)) {
            for (int e : g.edges_from(v)) {
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        auto m = cmul(g, CMon{{k}, {}, g.target(k)}, CMon{{}, {l}, g.target(l)});
                        if (!m) continue;
                        detail::tensor_add(t, *m, q(k, e, false) * q(l, e, true));
                    }
            }
        } else {
            int e0 = g.edges_into(v).front(); // lowest-indexed edge with t(e)=v
            for (int k = 0; k < n; ++k)
                detail::tensor_add(t, CMon::vertex(g.target(k)), q(k, e0, true) * q(k, e0, false));
        }
        for (const auto& [m, r] : t) spec.vertex_formula[size_t(v)].push_back({m, r});
    }
    return spec;
}

// alpha(S_ej) = sum_l S_el (x) u_{s(ej)s(el)} u_{t(ej)t(el)} into the graph's
// quantum automorphism group; alpha(p_i) = sum_k p_k (x) u_ik.
inline CoactionSpec banica_coaction(const Graph& g) {
    CoactionSpec spec;
    spec.graph = &g;
    spec.tag = "banica";
    spec.target = banica(g); // rejects loops and multi-edges
    const auto& lay = *spec.target.gens.layout;
    auto u = [&](int i, int j) {
        return NCPoly::letter(spec.target.gens.letter(lay.entry(i, j), false));
    };
    int n = g.edge_count();
    spec.edge_formula.resize(size_t(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            spec.edge_formula[size_t(j)].push_back(
                {l, u(g.source(j), g.source(l)) * u(g.target(j), g.target(l))});
    spec.vertex_formula.resize(size_t(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int k = 0; k < g.vertex_count(); ++k)
            spec.vertex_formula[size_t(i)].push_back({CMon::vertex(k), u(i, k)});
    return spec;
}

// alpha(S_i) = S_i (x) z_i into the free product of circles; alpha(p) = p (x) 1.
inline CoactionSpec diagonal_coaction(const Graph& g) {
    CoactionSpec spec;
    spec.graph = &g;
    spec.tag = "diagonal-free";
    spec.target = free_circles(g.edge_count());
    spec.edge_formula.resize(size_t(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i)
        spec.edge_formula[size_t(i)].push_back(
            {i, NCPoly::letter(spec.target.gens.letter(i, false))});
    spec.vertex_formula.resize(size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        spec.vertex_formula[size_t(v)].push_back({CMon::vertex(v), NCPoly::unit()});
    return spec;
}

// ---------------------------------------------------------------------------
// Constraint derivation

struct Constraint {
    std::string source; // "hom" | "tau" | "consistency"
    std::string left_leg;
    NCPoly relation;
};

namespace detail {

struct TaggedRelation {
    NCPoly rel;
    std::string source;
};

// The defining relations of C*(Gamma) over graph_pres.gens, tagged: relations
// pinning a sink projection to a non-lowest edge are the choice-consistency
// constraints, the rest are plain homomorphism constraints.
inline std::vector<TaggedRelation> tagged_graph_relations(const Graph& g,
                                                          const Presentation& graph_pres) {
    std::vector<TaggedRelation> out;
    int ne = g.edge_count();
    auto S = [&](int e, bool star) { return NCPoly::letter(graph_pres.gens.letter(e, star)); };
    auto P = [&](int v) { return NCPoly::letter(graph_pres.gens.letter(ne + v, false)); };
    for (int e = 0; e < ne; ++e) {
        int v = g.target(e);
        std::string src = "hom";
        if (g.is_sink(v) && g.edges_into(v).front() != e) src = "consistency";
        out.push_back({S(e, true) * S(e, false) - P(v), src});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        NCPoly sum;
        for (int e : g.edges_from(v)) sum.add(S(e, false) * S(e, true));
        out.push_back({sum - P(v), "hom"});
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = 0; w < g.vertex_count(); ++w)
            out.push_back({P(v) * P(w) - Rational(v == w ? 1 : 0) * P(v), "hom"});
    NCPoly all;
    for (int v = 0; v < g.vertex_count(); ++v) all.add(P(v));
    out.push_back({all - NCPoly::unit(), "hom"});
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j)
            if (i != j) out.push_back({S(i, true) * S(j, false), "hom"});
    return out;
}

inline void emit_constraint(std::vector<Constraint>& out, std::set<NCPoly, NCPolyLess>& seen,
                            const GeneratorSet& gens, const std::string& source,
                            const std::string& leg, const NCPoly& rel) {
    if (rel.zero()) return;
    NCPoly m = rel.monic();
    if (!seen.insert(m).second) return;
    out.push_back({source, leg, m});
    // A vanishing same-sign combination of hermitian squares kills each root;
    // emit the roots (and their stars) so the presentation carries them.
    std::vector<Word> roots;
    if (hermitian_square_roots(m, gens, roots)) {
        for (const auto& u : roots) {
            NCPoly x = NCPoly::word(u);
            if (seen.insert(x).second) out.push_back({source, leg, x});
            NCPoly xs = x.star(gens);
            if (seen.insert(xs).second) out.push_back({source, leg, xs});
        }
    }
}

} // namespace detail

// Expands every defining relation of C*(Gamma) through the generic linear
// coaction and emits each right-leg coefficient over the depth-normalized
// left-leg family as a constraint.
inline std::vector<Constraint> derive_action_constraints(const Graph& g, int depth = 4) {
    Presentation gp = graph_algebra_presentation(g);
    CoactionSpec spec = generic_coaction(g);
    std::vector<Constraint> out;
    std::set<NCPoly, NCPolyLess> seen;
    for (const auto& tr : detail::tagged_graph_relations(g, gp)) {
        TensorCombo t = expand(spec, tr.rel, depth);
        for (const auto& [m, r] : t)
            detail::emit_constraint(out, seen, spec.target.gens, tr.source, cmon_str(g, m), r);
    }
    return out;
}

// (tau (x) id) applied to the expansion of every degree-two word S_i S_j*,
// S_i* S_j and every sink projection, equated against tau of the input.
inline std::vector<Constraint> derive_tau_constraints(const Graph& g) {
    Presentation gp = graph_algebra_presentation(g);
    CoactionSpec spec = generic_coaction(g);
    TauFunctional t = tau(g);
    int n = g.edge_count();
    std::vector<Constraint> out;
    std::set<NCPoly, NCPolyLess> seen;
    auto process = [&](const std::vector<CLetter>& letters, const Rational& target,
                       const std::string& leg) {
        TensorCombo tc = expand_word(spec, letters);
        NCPoly acc;
        for (const auto& [m, r] : tc) acc.add(r, t.apply(CCombo::of(m)));
        acc.add(NCPoly::unit(), -target);
        detail::emit_constraint(out, seen, spec.target.gens, "tau", leg, acc);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            process({{CLetter::S, i}, {CLetter::Sstar, j}}, Rational(i == j ? 1 : 0),
                    "tau(S[" + g.edge(i).id + "]S[" + g.edge(j).id + "]*)");
            Rational fii(i == j ? f_matrix(g)[size_t(i)] : 0);
            process({{CLetter::Sstar, i}, {CLetter::S, j}}, fii,
                    "tau(S[" + g.edge(i).id + "]*S[" + g.edge(j).id + "])");
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v)) process({{CLetter::P, v}}, Rational(1), "tau(p[" + g.vertex_id(v) + "])");
    return out;
}

// The quantum symmetry presentation of C*(Gamma): the twisted unitary group
// of the F matrix together with every constraint the generic linear
// tau-preserving coaction imposes.
inline Presentation qlin_presentation(const Graph& g, int depth = 4) {
    std::vector<Rational> fdiag;
    for (long long d : f_matrix(g)) fdiag.push_back(Rational(d));
    Presentation p = aut_f(QMatrix::diagonal(fdiag), "q");
    p.name = "qlin";
    for (const auto& c : derive_action_constraints(g, depth)) p.add_relation(c.relation);
    for (const auto& c : derive_tau_constraints(g)) p.add_relation(c.relation);
    p.dedupe();
    p.coproduct = "Delta(q_ij) = sum_k q_ik (x) q_kj";
    p.provenance = "universal linear tau-preserving symmetry of the graph algebra";
    return p;
}

// ---------------------------------------------------------------------------
// Verification of named coactions

struct VerifyEntry {
    std::string label;
    bool proved = false;
    std::vector<ProofStep> certificate;
};

// For each defining relation of C*(Gamma): every right-leg coefficient of its
// expansion must vanish modulo the target presentation.
inline std::vector<VerifyEntry> verify_homomorphism(const CoactionSpec& spec, ProofEngine& engine,
                                                    int depth = 4) {
    const Graph& g = *spec.graph;
    Presentation gp = graph_algebra_presentation(g);
    std::vector<VerifyEntry> out;
    std::map<NCPoly, bool, NCPolyLess> cache;
    for (const auto& rel : gp.relations) {
        VerifyEntry entry;
        entry.label = rel.str(gp.gens);
        entry.proved = true;
        TensorCombo t = expand(spec, rel, depth);
        for (const auto& [m, r] : t) {
            auto it = cache.find(r);
            bool ok;
            if (it != cache.end()) {
                ok = it->second;
            } else {
                ProofResult pr = engine.prove(r);
                ok = pr.proved;
                cache.emplace(r, ok);
            }
            if (!ok) {
                entry.proved = false;
                entry.certificate.push_back(
                    {"residual", cmon_str(g, m) + " (x) " + r.str(spec.target.gens)});
            }
        }
        out.push_back(entry);
    }
    return out;
}

// For each basis element b of the degree-two span: (tau (x) id) of the
// expansion equals tau(b)·1 modulo the target presentation. Certificates cite
// any applied vanishing rule u_{vw} -> 0 whose row or column is a sink.
inline std::vector<VerifyEntry> verify_tau_preservation(const CoactionSpec& spec,
                                                        ProofEngine& engine) {
    const Graph& g = *spec.graph;
    TauFunctional t = tau(g);
    V2PlusBasis basis = v2plus_basis(g);
    std::vector<VerifyEntry> out;

    auto weber_steps = [&](const std::vector<int>& trace) {
        std::vector<ProofStep> steps;
        const auto& gens = spec.target.gens;
        if (!gens.layout) return steps;
        std::set<int> sinks;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.is_sink(v)) sinks.insert(v);
        std::set<int> cited;
        for (int idx : trace) {
            const Rule& rule = engine.system().rules()[size_t(idx)];
            if (rule.lhs.size() != 1 || !rule.rhs.zero()) continue;
            int gen = letter_gen(rule.lhs[0]);
            if (!gens.layout->contains(gen)) continue;
            int row = gens.layout->row_of(gen), col = gens.layout->col_of(gen);
            if ((sinks.count(row) || sinks.count(col)) && cited.insert(gen).second)
                steps.push_back({"weber-vanishing", gens.name(gen) + " -> 0"});
        }
        return steps;
    };

    auto check = [&](const std::vector<CLetter>& letters, const Rational& target,
                     const std::string& label) {
        VerifyEntry entry;
        entry.label = label;
        TensorCombo tc = expand_word(spec, letters);
        NCPoly goal;
        for (const auto& [m, r] : tc) goal.add(r, t.apply(CCombo::of(m)));
        goal.add(NCPoly::unit(), -target);
        ProofResult pr = engine.prove(goal);
        entry.proved = pr.proved;
        entry.certificate = pr.certificate;
        if (pr.proved) {
            std::vector<int> trace;
            engine.reduce(goal, &trace);
            for (auto& s : weber_steps(trace)) entry.certificate.push_back(s);
        }
        out.push_back(entry);
    };

    for (auto [i, j] : basis.pair_set)
        check({{CLetter::S, i}, {CLetter::Sstar, j}}, t.edge_pair(i, j),
              "tau(S[" + g.edge(i).id + "]S[" + g.edge(j).id + "]*)");
    for (int v : basis.sink_list)
        check({{CLetter::P, v}}, Rational(1), "tau(p[" + g.vertex_id(v) + "])");
    return out;
}

// Machine-readable derivation report.
inline nlohmann::json derive_report(const Graph& g, int depth = 4) {
    nlohmann::json j;
    j["graph"] = {{"vertices", nlohmann::json::array()}, {"edges", nlohmann::json::array()}};
    for (int v = 0; v < g.vertex_count(); ++v) j["graph"]["vertices"].push_back(g.vertex_id(v));
    for (int e = 0; e < g.edge_count(); ++e)
        j["graph"]["edges"].push_back({{"id", g.edge(e).id},
                                       {"src", g.vertex_id(g.source(e))},
                                       {"tgt", g.vertex_id(g.target(e))}});
    j["f_matrix"] = f_matrix(g);
    CoactionSpec spec = generic_coaction(g);
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : derive_action_constraints(g, depth))
        j["constraints"].push_back({{"source", c.source},
                                    {"left_leg", c.left_leg},
                                    {"relation", c.relation.str(spec.target.gens)}});
    for (const auto& c : derive_tau_constraints(g))
        j["constraints"].push_back({{"source", c.source},
                                    {"left_leg", c.left_leg},
                                    {"relation", c.relation.str(spec.target.gens)}});
    j["flags"] = {{"independence_assumed", !classify(g).acyclic}};
    return j;
}

} // namespace qsym
