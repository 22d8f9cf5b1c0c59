#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsym/presentation.hpp"
#include "qsym/rewrite.hpp"

namespace qsym {

// Antipode transform on a matrix layout: q_ij -> q_ji*, extended
// anti-multiplicatively on words and linearly on sums.
inline NCPoly antipode_transform(const NCPoly& p, const GeneratorSet& gens) {
    if (!gens.layout) throw std::invalid_argument("antipode requires a matrix layout");
    const MatrixLayout& lay = *gens.layout;
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        Word img;
        img.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int g = letter_gen(*it);
            if (!lay.contains(g))
                throw std::invalid_argument("antipode: generator outside matrix layout");
            int gt = lay.entry(lay.col_of(g), lay.row_of(g));
            img.push_back(gens.letter(gt, !letter_star(*it)));
        }
        out.add_term(img, c);
    }
    return out;
}

struct ProofStep {
    std::string kind;   // "reduce", "cstar-r1", "cstar-r2", "antipode"
    std::string detail; // adjoined relation / applied rules, human-readable
};

// Recognizes sum_i c_i u_i* u_i with all c_i of one sign; fills the roots u_i.
// Such a relation forces every u_i to vanish in any C*-quotient.
inline bool hermitian_square_roots(const NCPoly& p, const GeneratorSet& gens,
                                   std::vector<Word>& roots) {
    if (p.zero()) return false;
    int sign = 0;
    for (const auto& [w, c] : p.terms()) {
        if (sign == 0) sign = c.sign();
        if (c.sign() != sign) return false;
        if (w.empty() || w.size() % 2 != 0) return false;
        size_t half = w.size() / 2;
        Word u(w.begin() + long(half), w.end());
        Word head(w.begin(), w.begin() + long(half));
        if (head != star_word(gens, u)) return false;
        roots.push_back(u);
    }
    return true;
}

struct ProofResult {
    bool proved = false;
    bool cstar_used = false;
    bool antipode_used = false;
    std::vector<ProofStep> certificate;

    std::string status() const { return proved ? "Proved" : "Unknown"; }
};

struct ProofOptions {
    Caps caps{};
    bool cstar_inference = true;
    bool antipode = true;  // permitted; only attempted once R1/R2 stall
    int r1_word_degree = 2;
    int max_rounds = 12;
};

// Proof engine for "goal = 0 in every C*-algebra satisfying the relations".
// Reduction modulo the completed system is the workhorse; when it stalls,
// C*-sound inferences enlarge the system:
//   R1: reduce(x*x) = 0 (or reduce(x x*) = 0) adjoins x, for words x.
//   R2: a relation that is a same-sign combination of hermitian squares
//       adjoins every square root.
//   R3: the antipode image of any established relation is adjoined
//       (needs a matrix layout; attempted only after R1/R2 make no progress).
// The engine is shared across goals: everything adjoined is a consequence of
// the presentation, never of a particular goal.
class ProofEngine {
public:
    ProofEngine(const Presentation& pres, ProofOptions opts = {})
        : pres_(&pres), opts_(opts), sys_(pres.gens, opts.caps) {
        for (const auto& r : pres.relations) {
            sys_.add_relation(r, "input");
            known_.push_back(r);
        }
        sys_.saturate();
    }

    const RewriteSystem& system() const { return sys_; }
    const Presentation& presentation() const { return *pres_; }
    const std::vector<ProofStep>& inference_log() const { return log_; }

    NCPoly reduce(const NCPoly& p, std::vector<int>* trace = nullptr) const {
        return sys_.reduce(p, trace);
    }

    ProofResult prove(const NCPoly& goal) {
        ProofResult res;
        if (try_goal(goal, res)) return res;
        if (!opts_.cstar_inference && !can_antipode()) return res;

        for (int round = 0; round < opts_.max_rounds; ++round) {
            bool progress = false;
            if (opts_.cstar_inference) {
                progress |= r2_scan();
                progress |= r1_scan();
            }
            if (progress && try_goal(goal, res)) return res;
            if (!progress && can_antipode()) {
                progress = r3_round();
                if (progress && try_goal(goal, res)) return res;
            }
            if (!progress) break;
        }
        res.proved = false;
        res.certificate = log_;
        for (const auto& s : log_)
            if (s.kind == "antipode") res.antipode_used = true;
        return res;
    }

    // Re-derive a certificate from scratch: rebuild the system from the
    // presentation, replay every inference step with its premise re-checked,
    // and confirm the goal reduces to zero.
    bool replay(const NCPoly& goal, const std::vector<ProofStep>& cert) const {
        RewriteSystem sys(pres_->gens, opts_.caps);
        for (const auto& r : pres_->relations) sys.add_relation(r, "input");
        sys.saturate();
        for (const auto& step : cert) {
            if (step.kind == "cstar-r1" || step.kind == "cstar-r2") {
                NCPoly x = parse_expr(step.detail, pres_->gens);
                NCPoly sq1 = sys.reduce(x.star(pres_->gens) * x);
                NCPoly sq2 = sys.reduce(x * x.star(pres_->gens));
                if (!sq1.zero() && !sq2.zero()) return false;
                sys.add_relation(x, "replay");
                sys.saturate();
            } else if (step.kind == "antipode") {
                NCPoly src = parse_expr(step.detail, pres_->gens);
                if (!sys.reduce(src).zero()) return false;
                sys.add_relation(antipode_transform(src, pres_->gens), "replay");
                sys.saturate();
            }
        }
        return sys.reduce(goal).zero();
    }

private:
    const Presentation* pres_;
    ProofOptions opts_;
    RewriteSystem sys_;
    std::vector<NCPoly> known_;
    std::vector<ProofStep> log_;
    std::set<Word> r1_adjoined_;

    bool can_antipode() const { return opts_.antipode && pres_->gens.layout.has_value(); }

    bool try_goal(const NCPoly& goal, ProofResult& res) {
        std::vector<int> trace;
        NCPoly r = sys_.reduce(goal, &trace);
        if (!r.zero()) return false;
        res.proved = true;
        res.certificate = log_;
        res.cstar_used = false;
        for (const auto& s : log_)
            if (s.kind == "cstar-r1" || s.kind == "cstar-r2") res.cstar_used = true;
        for (const auto& s : log_)
            if (s.kind == "antipode") res.antipode_used = true;
        std::string applied;
        for (int idx : trace) {
            if (!applied.empty()) applied += ", ";
            applied += word_str(pres_->gens, sys_.rules()[size_t(idx)].lhs);
            if (applied.size() > 400) { applied += ", ..."; break; }
        }
        if (!applied.empty()) res.certificate.push_back({"reduce", applied});
        return true;
    }

    void adjoin(const NCPoly& rel, const std::string& kind, const std::string& detail) {
        log_.push_back({kind, detail});
        known_.push_back(rel);
        sys_.add_relation(rel, kind);
        sys_.saturate();
    }

    // all words of length 1..r1_word_degree over the alphabet
    bool r1_scan() {
        bool progress = false;
        std::vector<Letter> alphabet;
        for (int g = 0; g < pres_->gens.size(); ++g) {
            alphabet.push_back(pres_->gens.letter(g, false));
            if (!pres_->gens.self_adjoint(g)) alphabet.push_back(pres_->gens.letter(g, true));
        }
        std::vector<Word> stack;
        for (Letter l : alphabet) stack.push_back(Word{l});
        for (size_t i = 0; i < stack.size(); ++i) {
            Word w = stack[i];
            if (int(w.size()) < opts_.r1_word_degree)
                for (Letter l : alphabet) stack.push_back(concat(w, Word{l}));
            if (r1_adjoined_.count(w)) continue;
            NCPoly x = NCPoly::word(w);
            if (sys_.reduce(x).zero()) continue;
            NCPoly xs = x.star(pres_->gens);
            bool hit = sys_.reduce(xs * x).zero() || sys_.reduce(x * xs).zero();
            if (!hit) continue;
            r1_adjoined_.insert(w);
            adjoin(x, "cstar-r1", x.str(pres_->gens));
            progress = true;
        }
        return progress;
    }

    // relations of the shape sum_i c_i u_i* u_i = 0 with same-sign c_i
    bool r2_scan() {
        bool progress = false;
        std::vector<NCPoly> polys;
        for (const auto& r : sys_.rules())
            if (r.alive) polys.push_back(r.poly());
        for (const auto& p : polys) {
            std::vector<Word> roots;
            if (!hermitian_square_roots(p, pres_->gens, roots)) continue;
            for (const auto& u : roots) {
                if (r1_adjoined_.count(u)) continue;
                NCPoly x = NCPoly::word(u);
                if (sys_.reduce(x).zero()) continue;
                r1_adjoined_.insert(u);
                adjoin(x, "cstar-r2", x.str(pres_->gens));
                progress = true;
            }
        }
        return progress;
    }

    bool r3_round() {
        bool progress = false;
        std::vector<NCPoly> sources = known_;
        for (const auto& r : sys_.rules())
            if (r.alive) sources.push_back(r.poly());
        for (const auto& src : sources) {
            NCPoly img;
            try {
                img = antipode_transform(src, pres_->gens);
            } catch (const std::invalid_argument&) {
                continue; // relation touches generators outside the layout
            }
            if (sys_.reduce(img).zero()) continue;
            adjoin(img, "antipode", src.str(pres_->gens));
            progress = true;
        }
        return progress;
    }
};

// One-shot interface; `use_*` flags mirror the engine options.
inline ProofResult prove_zero(const NCPoly& goal, const Presentation& pres, Caps caps = {},
                              bool use_cstar_inference = true, bool use_antipode = true) {
    if (use_antipode && !pres.gens.layout)
        throw std::invalid_argument("antipode rule requested but presentation has no matrix layout");
    ProofOptions opts;
    opts.caps = caps;
    opts.cstar_inference = use_cstar_inference;
    opts.antipode = use_antipode;
    ProofEngine eng(pres, opts);
    return eng.prove(goal);
}

} // namespace qsym
