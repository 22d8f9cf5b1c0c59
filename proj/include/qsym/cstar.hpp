#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/graph.hpp"
#include "qsym/presentation.hpp"

namespace qsym {

// Monomial S_mu S_nu* of a graph C*-algebra: two paths with a common target
// vertex ("base"). Both legs empty with base v is the vertex projection p_v;
// base -1 with empty legs is the unit.
struct CMon {
    std::vector<int> left;  // path mu, edge indices in path order
    std::vector<int> right; // path nu, edge indices in path order
    int base = -1;

    bool is_unit() const { return base < 0; }
    bool is_vertex_projection() const { return base >= 0 && left.empty() && right.empty(); }
    int word_length() const { return int(left.size() + right.size()) + (is_vertex_projection() ? 1 : 0); }

    static CMon unit() { return CMon{}; }
    static CMon vertex(int v) { return CMon{{}, {}, v}; }

    CMon star() const { return CMon{right, left, base}; }

    bool operator<(const CMon& o) const {
        if (base != o.base) return base < o.base;
        if (left != o.left) return left < o.left;
        return right < o.right;
    }
    bool operator==(const CMon& o) const {
        return base == o.base && left == o.left && right == o.right;
    }
};

// Structural product of normal monomials; empty optional means the product is
// zero in the algebra. The inner legs cancel pairwise (S_f* S_g = delta_fg p).
inline std::optional<CMon> cmul(const Graph& g, const CMon& a, const CMon& b) {
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    size_t l = 0;
    while (l < a.right.size() && l < b.left.size()) {
        if (a.right[l] != b.left[l]) return std::nullopt;
        ++l;
    }
    if (l == a.right.size() && l == b.left.size()) {
        if (a.base != b.base) return std::nullopt;
        return CMon{a.left, b.right, b.base};
    }
    if (l == a.right.size()) { // tail of b.left survives
        int f = b.left[l];
        if (g.source(f) != a.base) return std::nullopt;
        CMon r;
        r.left = a.left;
        r.left.insert(r.left.end(), b.left.begin() + long(l), b.left.end());
        r.right = b.right;
        r.base = b.base;
        return r;
    }
    int f = a.right[l]; // tail of a.right survives
    if (g.source(f) != b.base) return std::nullopt;
    CMon r;
    r.left = a.left;
    r.right = b.right;
    r.right.insert(r.right.end(), a.right.begin() + long(l), a.right.end());
    r.base = a.base;
    return r;
}

// Formal sum of monomials with exact rational coefficients.
class CCombo {
public:
    using Terms = std::map<CMon, Rational>;

    CCombo() = default;
    static CCombo of(const CMon& m, const Rational& c = Rational(1)) {
        CCombo x;
        if (!c.is_zero()) x.terms_[m] = c;
        return x;
    }
    static CCombo unit() { return of(CMon::unit()); }

    bool zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    CCombo& add_term(const CMon& m, const Rational& c) {
        if (c.is_zero()) return *this;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }
    CCombo& add(const CCombo& o, const Rational& s = Rational(1)) {
        for (const auto& [m, c] : o.terms_) add_term(m, c * s);
        return *this;
    }
    friend CCombo operator+(const CCombo& a, const CCombo& b) { CCombo r = a; r.add(b); return r; }
    friend CCombo operator-(const CCombo& a, const CCombo& b) { CCombo r = a; r.add(b, Rational(-1)); return r; }

    CCombo mul(const Graph& g, const CCombo& o) const {
        CCombo r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                if (auto m = cmul(g, ma, mb)) r.add_term(*m, ca * cb);
        return r;
    }

    CCombo star() const {
        CCombo r;
        for (const auto& [m, c] : terms_) r.add_term(m.star(), c);
        return r;
    }

    bool operator==(const CCombo& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

// Letters of the graph-algebra alphabet for word input.
struct CLetter {
    enum Kind { S, Sstar, P } kind;
    int idx; // edge index for S/Sstar, vertex index for P
};

// Structural reduction of a word to a single monomial (or zero).
inline CCombo cword(const Graph& g, const std::vector<CLetter>& letters) {
    CMon acc = CMon::unit();
    for (const auto& l : letters) {
        CMon m;
        switch (l.kind) {
        case CLetter::S: m = CMon{{l.idx}, {}, g.target(l.idx)}; break;
        case CLetter::Sstar: m = CMon{{}, {l.idx}, g.target(l.idx)}; break;
        case CLetter::P: m = CMon::vertex(l.idx); break;
        }
        auto r = cmul(g, acc, m);
        if (!r) return CCombo();
        acc = *r;
    }
    return CCombo::of(acc);
}

struct InsufficientDepth : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Depth normal form: a monomial whose base is not a sink and whose shorter
// leg is below `depth` is expanded through p_v = sum_{s(f)=v} S_f S_f*
// appended to both legs; the unit expands through 1 = sum_v p_v. The
// resulting monomial family is treated as linearly independent downstream.
inline void expand_monomial(const Graph& g, const CMon& m, const Rational& c, int depth,
                            CCombo& out) {
    if (m.is_unit()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            expand_monomial(g, CMon::vertex(v), c, depth, out);
        return;
    }
    int minlen = int(std::min(m.left.size(), m.right.size()));
    if (g.is_sink(m.base) || minlen >= depth) {
        out.add_term(m, c);
        return;
    }
    for (int f : g.edges_from(m.base)) {
        CMon ext = m;
        ext.left.push_back(f);
        ext.right.push_back(f);
        ext.base = g.target(f);
        expand_monomial(g, ext, c, depth, out);
    }
}

inline CCombo normal_form(const Graph& g, const CCombo& x, int depth) {
    // A monomial whose shorter leg already exceeds the depth lies below the
    // refinement level the expansion can reach, so collection against it
    // would be meaningless.
    for (const auto& [m, c] : x.terms()) {
        int minlen = int(std::min(m.left.size(), m.right.size()));
        if (minlen > depth)
            throw InsufficientDepth("insufficient depth " + std::to_string(depth) +
                                    " for a monomial of leg length " + std::to_string(minlen));
    }
    CCombo out;
    for (const auto& [m, c] : x.terms()) expand_monomial(g, m, c, depth, out);
    return out;
}

inline CCombo normal_form_word(const Graph& g, const std::vector<CLetter>& letters, int depth) {
    if (int(letters.size()) > depth)
        throw InsufficientDepth("insufficient depth " + std::to_string(depth) +
                                " for a word of length " + std::to_string(letters.size()));
    return normal_form(g, cword(g, letters), depth);
}

struct V2PlusBasis {
    std::vector<std::pair<int, int>> pair_set; // edge index pairs with equal targets
    std::vector<int> sink_list;                // sink vertex indices
};

inline V2PlusBasis v2plus_basis(const Graph& g) {
    V2PlusBasis b;
    for (int i = 0; i < g.edge_count(); ++i)
        for (int j = 0; j < g.edge_count(); ++j)
            if (g.target(i) == g.target(j)) b.pair_set.push_back({i, j});
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_sink(v)) b.sink_list.push_back(v);
    return b;
}

// The functional on the span of {S_i S_j*, sink projections}: tau(S_i S_j*)
// is delta_ij and tau(p_v) = 1 on sinks. Vertex projections of non-sinks
// evaluate through p_v = sum_{s(f)=v} S_f S_f* to the out-degree.
struct TauFunctional {
    const Graph* g;

    Rational edge_pair(int i, int j) const { return Rational(i == j ? 1 : 0); }
    Rational vertex(int v) const { return g->is_sink(v) ? Rational(1) : Rational(g->out_degree(v)); }
    bool on_basis(int i, int j) const { return g->target(i) == g->target(j); }

    Rational apply(const CCombo& x) const {
        Rational total(0);
        for (const auto& [m, c] : x.terms()) {
            if (m.is_vertex_projection()) {
                total += c * vertex(m.base);
            } else if (m.left.size() == 1 && m.right.size() == 1) {
                total += c * edge_pair(m.left[0], m.right[0]);
            } else {
                throw std::invalid_argument("tau is undefined outside the degree-two span");
            }
        }
        return total;
    }
};

inline TauFunctional tau(const Graph& g) { return TauFunctional{&g}; }

// Diagonal matrix with entry i the out-degree of t(e_i), or 1 at sinks;
// always invertible.
inline std::vector<long long> f_matrix(const Graph& g) {
    std::vector<long long> d(size_t(g.edge_count()), 1);
    for (int e = 0; e < g.edge_count(); ++e) {
        int deg = g.out_degree(g.target(e));
        d[size_t(e)] = deg > 0 ? deg : 1;
    }
    return d;
}

// Defining presentation of C*(Gamma): partial isometries S_e and mutually
// orthogonal projections p_v with S_e* S_e = p_{t(e)},
// sum_{s(e)=v} S_e S_e* = p_v for non-sinks, sum_v p_v = 1 and
// S_i* S_j = 0 for i != j.
inline Presentation graph_algebra_presentation(const Graph& g) {
    Presentation p;
    p.name = "graph-algebra";
    for (int e = 0; e < g.edge_count(); ++e) p.gens.add("S_" + g.edge(e).id);
    for (int v = 0; v < g.vertex_count(); ++v) p.gens.add("p_" + g.vertex_id(v), true);
    int ne = g.edge_count();
    auto S = [&](int e, bool star) { return NCPoly::letter(p.gens.letter(e, star)); };
    auto P = [&](int v) { return NCPoly::letter(p.gens.letter(ne + v, false)); };

    for (int e = 0; e < ne; ++e) p.add_relation(S(e, true) * S(e, false) - P(g.target(e)));
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v)) continue;
        NCPoly sum;
        for (int e : g.edges_from(v)) sum.add(S(e, false) * S(e, true));
        p.add_relation(sum - P(v));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w = 0; w < g.vertex_count(); ++w)
            p.add_relation(P(v) * P(w) - Rational(v == w ? 1 : 0) * P(v));
    NCPoly all;
    for (int v = 0; v < g.vertex_count(); ++v) all.add(P(v));
    p.add_relation(all - NCPoly::unit());
    for (int i = 0; i < ne; ++i)
        for (int j = 0; j < ne; ++j)
            if (i != j) p.add_relation(S(i, true) * S(j, false));
    p.dedupe();
    p.provenance = "graph C*-algebra defining relations";
    return p;
}

// Graph-algebra letters of a word over graph_algebra_presentation generators.
inline std::vector<CLetter> cletters_of_word(const Graph& g, const Word& w) {
    std::vector<CLetter> out;
    int ne = g.edge_count();
    for (Letter l : w) {
        int gen = letter_gen(l);
        if (gen < ne)
            out.push_back({letter_star(l) ? CLetter::Sstar : CLetter::S, gen});
        else
            out.push_back({CLetter::P, gen - ne});
    }
    return out;
}

inline std::string cmon_str(const Graph& g, const CMon& m) {
    if (m.is_unit()) return "1";
    if (m.is_vertex_projection()) return "p[" + g.vertex_id(m.base) + "]";
    std::string s;
    for (int e : m.left) s += "S[" + g.edge(e).id + "]";
    for (auto it = m.right.rbegin(); it != m.right.rend(); ++it) {
        if (!s.empty()) s += "·";
        s += "S[" + g.edge(*it).id + "]*";
    }
    return s;
}

inline std::string ccombo_str(const Graph& g, const CCombo& x) {
    if (x.zero()) return "0";
    std::string s;
    for (const auto& [m, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += c.str() + "·";
        s += cmon_str(g, m);
    }
    return s;
}

inline nlohmann::json ccombo_json(const Graph& g, const CCombo& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : x.terms()) {
        nlohmann::json t;
        t["coeff"] = c.str();
        t["left_path"] = nlohmann::json::array();
        for (int e : m.left) t["left_path"].push_back(g.edge(e).id);
        t["right_path"] = nlohmann::json::array();
        for (int e : m.right) t["right_path"].push_back(g.edge(e).id);
        if (m.base >= 0) t["vertex"] = g.vertex_id(m.base);
        arr.push_back(t);
    }
    return arr;
}

} // namespace qsym
