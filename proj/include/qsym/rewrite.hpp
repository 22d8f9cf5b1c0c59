#pragma once

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "qsym/ncpoly.hpp"

namespace qsym {

struct Caps {
    int degree = 8;     // max combined degree of a processed overlap word
    int rules = 20000;  // max live rule count
};

struct Rule {
    Word lhs;
    NCPoly rhs; // every word of rhs is strictly below lhs in the order
    bool alive = true;
    std::string tag;

    NCPoly poly() const { return NCPoly::word(lhs) - rhs; }
};

// Oriented, inter-reduced, star-closed rewriting system with degree-capped
// critical-pair completion (a semi-decision procedure: when caps are hit the
// system is returned as-is and flagged incomplete).
class RewriteSystem {
public:
    RewriteSystem(const GeneratorSet& gens, Caps caps = {}) : gens_(&gens), caps_(caps) {
        buckets_.resize(size_t(gens.size()) * 2);
    }

    const GeneratorSet& gens() const { return *gens_; }
    const Caps& caps() const { return caps_; }
    const std::vector<Rule>& rules() const { return rules_; }

    int live_rules() const {
        int n = 0;
        for (const auto& r : rules_)
            if (r.alive) ++n;
        return n;
    }

    bool complete_within_caps() const { return !rule_capped_ && !degree_skipped_; }
    bool rule_capped() const { return rule_capped_; }

    // Full normal form. Deterministic: always rewrites the largest reducible
    // term at its leftmost reducible position with the lowest-index rule.
    NCPoly reduce(const NCPoly& p, std::vector<int>* trace = nullptr) const {
        NCPoly out;
        NCPoly work = p;
        while (!work.zero()) {
            auto [w, c] = work.leading();
            int ridx = -1;
            size_t rpos = 0;
            find_redex(w, ridx, rpos);
            if (ridx < 0) {
                out.add_term(w, c);
                work.add_term(w, -c);
                continue;
            }
            if (trace) trace->push_back(ridx);
            const Rule& r = rules_[size_t(ridx)];
            Word prefix(w.begin(), w.begin() + long(rpos));
            Word suffix(w.begin() + long(rpos + r.lhs.size()), w.end());
            work.add_term(w, -c);
            work.add(r.rhs.left_mul(prefix).right_mul(suffix), c);
        }
        return out;
    }

    // Adds a relation (and its star) and restores inter-reducedness. Critical
    // pairs are queued; call saturate() to process them.
    void add_relation(const NCPoly& p, const std::string& tag) {
        std::vector<NCPoly> work{p, p.star(*gens_)};
        while (!work.empty()) {
            NCPoly q = reduce(work.back());
            work.pop_back();
            if (q.zero()) continue;
            q = q.monic();
            Word lhs = q.leading().first;
            NCPoly rhs = NCPoly::word(lhs) - q;

            // retire rules whose lhs became reducible, re-queue their content
            for (auto& r : rules_) {
                if (!r.alive) continue;
                if (contains_subword(r.lhs, lhs)) {
                    r.alive = false;
                    work.push_back(r.poly());
                }
            }

            int idx = int(rules_.size());
            rules_.push_back(Rule{lhs, rhs, true, tag});
            buckets_[lhs[0]].push_back(idx);

            // normalize right-hand sides against the enlarged system
            for (auto& r : rules_) {
                if (!r.alive || &r == &rules_.back()) continue;
                bool touched = false;
                for (const auto& [w, c] : r.rhs.terms())
                    if (contains_subword(w, lhs)) { touched = true; break; }
                if (touched) r.rhs = reduce(r.rhs);
            }

            enqueue_pairs(idx);
        }
    }

    // Processes queued critical pairs in (degree, age) order until exhaustion
    // or a cap is hit.
    void saturate() {
        while (!pairs_.empty()) {
            if (live_rules() > caps_.rules) {
                rule_capped_ = true;
                return;
            }
            Pair pr = pairs_.top();
            pairs_.pop();
            const Rule& a = rules_[size_t(pr.i)];
            const Rule& b = rules_[size_t(pr.j)];
            if (!a.alive || !b.alive) continue;
            // overlap word W = a.lhs + b.lhs[k:]; two one-step reductions of W
            Word suffix(b.lhs.begin() + pr.k, b.lhs.end());
            Word prefix(a.lhs.begin(), a.lhs.end() - pr.k);
            NCPoly spoly = a.rhs.right_mul(suffix) - b.rhs.left_mul(prefix);
            add_relation(spoly, "cp");
        }
    }

private:
    struct Pair {
        int deg;
        std::uint64_t seq;
        int i, j, k;
        bool operator>(const Pair& o) const {
            if (deg != o.deg) return deg > o.deg;
            return seq > o.seq;
        }
    };

    const GeneratorSet* gens_;
    Caps caps_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> buckets_; // rule indices by first letter of lhs
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs_;
    std::uint64_t seq_ = 0;
    bool degree_skipped_ = false;
    bool rule_capped_ = false;

    static bool contains_subword(const Word& w, const Word& pat) {
        if (pat.size() > w.size()) return false;
        for (size_t pos = 0; pos + pat.size() <= w.size(); ++pos)
            if (matches_at(w, pos, pat)) return true;
        return false;
    }

    void find_redex(const Word& w, int& ridx, size_t& rpos) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (int idx : buckets_[w[pos]]) {
                const Rule& r = rules_[size_t(idx)];
                if (!r.alive) continue;
                if (matches_at(w, pos, r.lhs)) {
                    ridx = idx;
                    rpos = pos;
                    return;
                }
            }
        }
        ridx = -1;
    }

    void enqueue_pairs(int idx) {
        const Word& u = rules_[size_t(idx)].lhs;
        for (int j = 0; j < int(rules_.size()); ++j) {
            if (!rules_[size_t(j)].alive) continue;
            const Word& v = rules_[size_t(j)].lhs;
            enqueue_overlaps(idx, j, u, v);
            if (j != idx) enqueue_overlaps(j, idx, v, u);
        }
    }

    // proper overlaps: a nonempty proper suffix of u equals a prefix of v
    void enqueue_overlaps(int i, int j, const Word& u, const Word& v) {
        int maxk = int(std::min(u.size(), v.size())) - 1;
        for (int k = 1; k <= maxk; ++k) {
            bool ok = true;
            for (int t = 0; t < k; ++t)
                if (u[u.size() - size_t(k) + size_t(t)] != v[size_t(t)]) { ok = false; break; }
            if (!ok) continue;
            int deg = int(u.size() + v.size()) - k;
            if (deg > caps_.degree) {
                degree_skipped_ = true;
                continue;
            }
            pairs_.push(Pair{deg, seq_++, i, j, k});
        }
    }
};

// Degree-capped completion of a star-closed relation set.
inline RewriteSystem complete(const std::vector<NCPoly>& relations, const GeneratorSet& gens,
                              Caps caps = {}) {
    RewriteSystem sys(gens, caps);
    for (const auto& r : relations) sys.add_relation(r, "input");
    sys.saturate();
    return sys;
}

} // namespace qsym
