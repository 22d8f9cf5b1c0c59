#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

// A letter packs a generator index with a star flag: code = gen*2 + star.
// Self-adjoint generators never carry the star bit (normalized on creation),
// so the starred letter of a generator sorts immediately after the plain one.
using Letter = std::uint32_t;

inline int letter_gen(Letter l) { return int(l >> 1); }
inline bool letter_star(Letter l) { return (l & 1u) != 0; }

using Word = std::vector<Letter>;

struct MatrixLayout {
    std::string prefix;
    int rows = 0;
    int cols = 0;
    int first = 0; // generator index of entry (0,0); entries stored row-major

    bool contains(int gen) const { return gen >= first && gen < first + rows * cols; }
    int entry(int i, int j) const { return first + i * cols + j; } // 0-based
    int row_of(int gen) const { return (gen - first) / cols; }
    int col_of(int gen) const { return (gen - first) % cols; }
};

class GeneratorSet {
public:
    struct Gen {
        std::string name;
        bool self_adjoint = false;
    };

    int add(const std::string& name, bool self_adjoint = false) {
        gens_.push_back({name, self_adjoint});
        return int(gens_.size()) - 1;
    }

    int size() const { return int(gens_.size()); }
    const Gen& gen(int i) const { return gens_.at(size_t(i)); }
    const std::string& name(int i) const { return gens_.at(size_t(i)).name; }
    bool self_adjoint(int i) const { return gens_.at(size_t(i)).self_adjoint; }

    int find(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (gens_[size_t(i)].name == name) return i;
        return -1;
    }

    Letter letter(int gen, bool star) const {
        if (gen < 0 || gen >= size()) throw std::out_of_range("generator index");
        if (star && gens_[size_t(gen)].self_adjoint) star = false;
        return Letter(gen) * 2 + (star ? 1 : 0);
    }

    Letter conj(Letter l) const {
        int g = letter_gen(l);
        if (gens_.at(size_t(g)).self_adjoint) return Letter(g) * 2;
        return l ^ 1u;
    }

    std::string letter_name(Letter l) const {
        std::string s = name(letter_gen(l));
        if (letter_star(l)) s += "*";
        return s;
    }

    std::optional<MatrixLayout> layout;

private:
    std::vector<Gen> gens_;
};

// Degree-lexicographic order; generator precedence is declaration order.
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline Word star_word(const GeneratorSet& gens, const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(gens.conj(*it));
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Is `pat` a subword of `w` at position `pos`?
inline bool matches_at(const Word& w, size_t pos, const Word& pat) {
    if (pos + pat.size() > w.size()) return false;
    for (size_t i = 0; i < pat.size(); ++i)
        if (w[pos + i] != pat[i]) return false;
    return true;
}

inline std::string word_str(const GeneratorSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += gens.letter_name(w[i]);
    }
    return s;
}

} // namespace qsym
