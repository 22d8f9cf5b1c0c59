#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/rational.hpp"
#include "qsym/word.hpp"

namespace qsym {

// Noncommutative polynomial: a finite map word -> exact rational coefficient.
// Zero coefficients are never stored.
class NCPoly {
public:
    using Terms = std::map<Word, Rational, DegLex>;

    NCPoly() = default;

    static NCPoly unit(const Rational& c = Rational(1)) { return word(Word{}, c); }
    static NCPoly word(const Word& w, const Rational& c = Rational(1)) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[w] = c;
        return p;
    }
    static NCPoly letter(Letter l, const Rational& c = Rational(1)) { return word(Word{l}, c); }

    bool zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Largest term in the monomial order.
    const std::pair<const Word, Rational>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }
    int degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }

    NCPoly& add(const NCPoly& o, const Rational& scale = Rational(1)) {
        if (scale.is_zero()) return *this;
        for (const auto& [w, c] : o.terms_) add_term(w, c * scale);
        return *this;
    }
    NCPoly& add_term(const Word& w, const Rational& c) {
        if (c.is_zero()) return *this;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) { NCPoly r = a; r.add(b); return r; }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) { NCPoly r = a; r.add(b, Rational(-1)); return r; }
    friend NCPoly operator-(const NCPoly& a) { NCPoly r; r.add(a, Rational(-1)); return r; }
    friend NCPoly operator*(const Rational& c, const NCPoly& a) { NCPoly r; r.add(a, c); return r; }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }

    NCPoly left_mul(const Word& w) const {
        NCPoly r;
        for (const auto& [t, c] : terms_) r.terms_.emplace(concat(w, t), c);
        return r;
    }
    NCPoly right_mul(const Word& w) const {
        NCPoly r;
        for (const auto& [t, c] : terms_) r.terms_.emplace(concat(t, w), c);
        return r;
    }

    NCPoly star(const GeneratorSet& gens) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.add_term(star_word(gens, w), c);
        return r;
    }

    NCPoly monic() const {
        if (terms_.empty()) return *this;
        Rational lc = terms_.rbegin()->second;
        NCPoly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c / lc);
        return r;
    }

    // Map each source generator to a polynomial over `dst`; starred letters map
    // to the star of the image.
    NCPoly substitute(const GeneratorSet& /*src*/, const std::vector<NCPoly>& images,
                      const GeneratorSet& dst) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) {
            NCPoly acc = NCPoly::unit(c);
            for (Letter l : w) {
                int g = letter_gen(l);
                if (g < 0 || size_t(g) >= images.size())
                    throw std::out_of_range("substitute: generator without image");
                const NCPoly& im = images[size_t(g)];
                acc = letter_star(l) ? acc * im.star(dst) : acc * im;
            }
            r.add(acc);
        }
        return r;
    }

    // Evaluate with scalar (hence self-adjoint real) generator values.
    Rational eval_scalar(const std::vector<Rational>& vals) const {
        Rational total(0);
        for (const auto& [w, c] : terms_) {
            Rational prod = c;
            for (Letter l : w) prod *= vals.at(size_t(letter_gen(l)));
            total += prod;
        }
        return total;
    }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(terms_ == o.terms_); }

    // Total order, for use in ordered sets of polynomials.
    static bool less(const NCPoly& a, const NCPoly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        DegLex lt;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (lt(ia->first, ib->first)) return true;
            if (lt(ib->first, ia->first)) return false;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

    // Expression-grammar rendering, e.g. "q_1_1* q_1_1 - q_2_2 q_2_2*".
    std::string str(const GeneratorSet& gens) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational c = it->second;
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) s += "- ";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (it->first.empty()) {
                s += mag.str();
            } else {
                if (!mag.is_one()) s += mag.str() + " ";
                s += word_str(gens, it->first);
            }
        }
        return s;
    }

private:
    Terms terms_;
};

struct NCPolyLess {
    bool operator()(const NCPoly& a, const NCPoly& b) const { return NCPoly::less(a, b); }
};

} // namespace qsym
