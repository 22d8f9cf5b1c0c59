#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace qsym;
using namespace qsym::testing;

TEST_CASE("reduce basics") {
    Presentation s2 = s_n_plus(2);
    RewriteSystem sys = complete(s2.relations, s2.gens, Caps{6, 20000});
    CHECK(sys.reduce(NCPoly()).zero());
    // magic-unitary consequence: row entries are orthogonal
    CHECK(sys.reduce(rel(s2, "u_1_1 u_1_2")).zero());
    // hand completion of the 2x2 magic unitary: u_1_2 rewrites to 1 - u_1_1
    CHECK(sys.reduce(rel(s2, "u_1_2 - (1 - u_1_1)")).zero());
    // commutativity of the two-point quantum permutation group
    CHECK(sys.reduce(rel(s2, "u_1_1 u_2_2 - u_2_2 u_1_1")).zero());
    CHECK(sys.complete_within_caps());
}

static NCPoly random_poly(const GeneratorSet& gens, std::mt19937_64& rng) {
    NCPoly p;
    int terms = 1 + int(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Word w;
        int len = int(rng() % 5);
        for (int i = 0; i < len; ++i)
            w.push_back(gens.letter(int(rng() % std::uint64_t(gens.size())), (rng() & 1) != 0));
        long long num = (long long)(rng() % 7) - 3;
        long long den = 1 + (long long)(rng() % 3);
        p.add_term(w, Rational(num, den));
    }
    return p;
}

TEST_CASE("reduce is idempotent and star-compatible") {
    Presentation ql = qlin_presentation(k2_graph());
    RewriteSystem sys = complete(ql.relations, ql.gens, Caps{6, 20000});
    for (const char* text :
         {"q_1_1 q_2_1 q_1_2", "q_1_1* q_1_1 q_2_2 - q_2_1", "q_1_2 q_2_1* + 1/2 q_1_1",
          "q_2_2 q_2_2* q_2_2 - q_1_1* q_1_2"}) {
        NCPoly p = rel(ql, text);
        NCPoly r = sys.reduce(p);
        CHECK(sys.reduce(r) == r);
        CHECK(sys.reduce(p.star(ql.gens)) == r.star(ql.gens));
    }
    // and over seeded random polynomials, together with linearity
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        NCPoly p = random_poly(ql.gens, rng);
        NCPoly q = random_poly(ql.gens, rng);
        NCPoly rp = sys.reduce(p), rq = sys.reduce(q);
        CHECK(sys.reduce(rp) == rp);
        CHECK(sys.reduce(p.star(ql.gens)) == rp.star(ql.gens));
        CHECK(sys.reduce(p + q) == rp + rq);
        CHECK(sys.reduce(p * q) == sys.reduce(rp * rq));
    }
}

TEST_CASE("twisted unitary relations reduce as expected") {
    std::vector<Rational> d{Rational(1), Rational(1)};
    Presentation u2 = aut_f(QMatrix::diagonal(d), "q");
    RewriteSystem sys = complete(u2.relations, u2.gens, Caps{6, 20000});
    CHECK(sys.reduce(rel(u2, "q_1_1* q_1_1 + q_1_2* q_1_2") - NCPoly::unit()).zero());
}

TEST_CASE("completion of a unitary generator is already confluent") {
    Presentation fc = free_circles(1);
    RewriteSystem sys = complete(fc.relations, fc.gens, Caps{8, 100});
    CHECK(sys.live_rules() == 2);
    CHECK(sys.reduce(rel(fc, "z_1 z_1* z_1 - z_1")).zero());
    CHECK(sys.complete_within_caps());
}

TEST_CASE("rule cap flags an incomplete system") {
    Presentation ql = qlin_presentation(k2_graph());
    RewriteSystem sys(ql.gens, Caps{6, 3});
    for (const auto& r : ql.relations) sys.add_relation(r, "input");
    sys.saturate();
    CHECK_FALSE(sys.complete_within_caps());
    CHECK(sys.rule_capped());
}

TEST_CASE("antipode transform") {
    Presentation ql = qlin_presentation(k2_graph());
    CHECK(antipode_transform(rel(ql, "q_1_2"), ql.gens) == rel(ql, "q_2_1*"));
    CHECK(antipode_transform(NCPoly::unit(), ql.gens) == NCPoly::unit());
    CHECK(antipode_transform(rel(ql, "q_1_1 q_2_1"), ql.gens) == rel(ql, "q_1_2* q_1_1*"));
    // involutive on sums
    NCPoly p = rel(ql, "q_1_1 q_2_2 - 3 q_1_2*");
    CHECK(antipode_transform(antipode_transform(p, ql.gens), ql.gens) == p);
    Presentation fc = free_circles(2);
    CHECK_THROWS_AS(antipode_transform(rel(fc, "z_1"), fc.gens), std::invalid_argument);
}

TEST_CASE("prove_zero contract") {
    Presentation ql = qlin_presentation(k2_graph());
    Caps caps{6, 20000};
    ProofResult trivial = prove_zero(NCPoly(), ql, caps);
    CHECK(trivial.proved);
    CHECK(trivial.certificate.empty()); // the zero goal needs no steps at all
    CHECK(prove_zero(rel(ql, "q_1_2"), ql, caps, true, true).proved == false);
    CHECK(prove_zero(rel(ql, "q_1_1 q_2_1"), ql, caps).proved);
    CHECK(prove_zero(rel(ql, "q_1_1* q_1_1 - q_1_1 q_1_1*"), ql, caps).proved);
    // no layout: requesting the antipode rule is an error
    Presentation fc = free_circles(2);
    CHECK_THROWS_AS(prove_zero(rel(fc, "z_1"), fc, caps, true, true), std::invalid_argument);
    CHECK_FALSE(prove_zero(rel(fc, "z_1 - z_2"), fc, caps, true, false).proved);
}

TEST_CASE("the C*-inference rules fire where plain rewriting cannot") {
    // x* x = 0 has no consequence in the free *-algebra, but forces x = 0
    GeneratorSet gens;
    gens.add("x");
    gens.add("y");
    Presentation p;
    p.name = "square-zero";
    p.gens = gens;
    p.add_relation(parse_expr("x* x", gens));
    p.add_relation(parse_expr("y y* + x x*", gens)); // same-sign hermitian squares
    ProofOptions opts;
    ProofEngine eng(p, opts);
    auto rx = eng.prove(parse_expr("x", gens));
    CHECK(rx.proved);
    CHECK(rx.cstar_used);
    CHECK(eng.prove(parse_expr("y", gens)).proved);
    CHECK_FALSE(eng.prove(parse_expr("x - y - 1", gens)).proved);
}

TEST_CASE("certificates replay from scratch") {
    Presentation ql = qlin_presentation(k2_graph());
    ProofOptions opts;
    opts.caps = Caps{6, 20000};
    ProofEngine eng(ql, opts);
    for (const char* text : {"q_1_1 q_2_1", "q_1_1 q_1_1* q_1_1 - q_1_1", "q_2_2* q_2_2 - q_2_2 q_2_2*"}) {
        NCPoly goal = rel(ql, text);
        ProofResult res = eng.prove(goal);
        REQUIRE(res.proved);
        CHECK(eng.replay(goal, res.certificate));
    }
    // a certificate does not replay against a goal it does not prove
    ProofResult res = eng.prove(rel(ql, "q_1_1 q_2_1"));
    CHECK_FALSE(eng.replay(rel(ql, "q_1_1 - q_2_2"), res.certificate));
}
