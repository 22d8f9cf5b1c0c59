#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/ncpoly.hpp"

namespace qsym {

struct ExprError : std::runtime_error {
    explicit ExprError(const std::string& m) : std::runtime_error(m) {}
};

// Relation expression parser.
//
//   expr     := term (("+"|"-") term)*
//   term     := [rational] factor+
//   factor   := gen ["*"] | "1" | "(" expr ")"
//   rational := int ["/" int]
//
// Generator tokens are identifiers looked up in the generator set; a trailing
// '*' stars the letter. A leading integer token is a coefficient; a bare
// integer term is a constant, so "1" doubles as the unit.
class ExprParser {
public:
    ExprParser(const std::string& text, const GeneratorSet& gens) : s_(text), gens_(gens) {}

    NCPoly parse() {
        NCPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    const GeneratorSet& gens_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ExprError("expression error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static bool factor_start(char c) {
        return c == '(' || std::isalpha((unsigned char)c) || c == '_';
    }

    NCPoly parse_expr() {
        NCPoly acc;
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        acc.add(parse_term(), Rational(neg ? -1 : 1));
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            acc.add(parse_term(), Rational(c == '-' ? -1 : 1));
        }
        return acc;
    }

    NCPoly parse_term() {
        Rational coeff(1);
        if (std::isdigit((unsigned char)peek())) {
            Rational r = parse_rational();
            if (!factor_start(peek())) return NCPoly::unit(r); // constant term, incl. bare "1"
            coeff = r;
        }
        NCPoly acc = NCPoly::unit();
        bool have_factor = false;
        while (true) {
            char c = peek();
            if (c == '(') {
                ++pos_;
                acc = acc * parse_expr();
                if (peek() != ')') fail("expected ')'");
                ++pos_;
                have_factor = true;
            } else if (std::isalpha((unsigned char)c) || c == '_') {
                acc = acc * parse_gen();
                have_factor = true;
            } else if (c == '1' && !have_factor_digit_follows()) {
                ++pos_;
                have_factor = true;
            } else {
                break;
            }
        }
        if (!have_factor) fail("expected a factor");
        return coeff * acc;
    }

    bool have_factor_digit_follows() {
        // for a unit factor "1", the next character must not extend the token
        size_t p = pos_ + 1;
        return p < s_.size() && (std::isalnum((unsigned char)s_[p]) || s_[p] == '_' || s_[p] == '/');
    }

    Rational parse_rational() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (dstart == pos_) fail("expected denominator");
            return Rational::parse(num + "/" + s_.substr(dstart, pos_ - dstart));
        }
        return Rational::parse(num);
    }

    NCPoly parse_gen() {
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        int g = gens_.find(name);
        if (g < 0) fail("unknown generator '" + name + "'");
        bool star = false;
        if (pos_ < s_.size() && s_[pos_] == '*') {
            star = true;
            ++pos_;
        }
        return NCPoly::letter(gens_.letter(g, star));
    }
};

inline NCPoly parse_expr(const std::string& text, const GeneratorSet& gens) {
    return ExprParser(text, gens).parse();
}

} // namespace qsym
