#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/normalize.hpp"
#include "tptl/parser.hpp"
#include "tptl/semantics.hpp"

using namespace tptl;

namespace {
TimedWord W(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ' ') c = '\n';
    return TimedWord::parse_text(t);
}
}  // namespace

TEST_CASE("worked evaluation examples") {
    Formula phi = parse_tptl("x.(a U (b U (c & x in [1,2])))");
    TimedWord rho = W("a@0 a@0.2 b@1.1 b@1.9 c@1.91 c@2.1");
    TimedWord rho2 = W("a@0 a@0.3 b@1.4 c@2.1 c@2.5");
    CHECK(eval_tptl(rho, 1, {}, phi));
    CHECK_FALSE(eval_tptl(rho2, 1, {}, phi));
    CHECK(eval_tptl(rho2, 2, {}, phi));
    CHECK(language_member(rho, phi));
    CHECK(eval_tptl(rho, 3, {}, Formula::top()));
    CHECK(language_member(W("a@0"), parse_tptl("a")));
    CHECK_FALSE(language_member(W("b@0"), parse_tptl("a")));
    CHECK_THROWS_AS(eval_tptl(rho, 7, {}, phi), PositionOutOfRange);
    CHECK_THROWS_AS(language_member(TimedWord(), phi), EmptyWord);
    CHECK_THROWS_AS(language_member(rho, parse_tptl("F(x <= 1)")), OpenFormula);
}

TEST_CASE("strict future semantics") {
    CHECK(language_member(W("a@0"), parse_tptl("G false")));
    CHECK_FALSE(language_member(W("a@0"), parse_tptl("F a")));
    CHECK(language_member(W("b@0 a@1"), parse_tptl("F a")));
    CHECK(language_member(W("b@0 a@1"), parse_tptl("c U a")));
    CHECK_FALSE(language_member(W("b@0 c@1"), parse_tptl("X a")));
    CHECK(eval_tptl(W("b@0 c@1"), 1, {{"x", Rational(0)}}, parse_tptl("X (c & x <= 1)")));
    CHECK_FALSE(eval_tptl(W("b@0 c@1"), 1, {{"x", Rational(1, 2)}}, parse_tptl("X (c & x >= 1)")));
}

TEST_CASE("evaluator agrees with the naive oracle") {
    Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        Formula f = random_fragment_formula(rng);
        auto letters = word_letters(f);
        for (int k = 0; k < 4; ++k) {
            TimedWord w = random_word(rng, letters);
            for (std::size_t p = 1; p <= w.size(); ++p) REQUIRE(eval_tptl(w, p, {}, f) == oracle::naive_eval(w, p, {}, f));
        }
    }
}

TEST_CASE("closed formulas ignore the valuation") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Formula f = random_fragment_formula(rng);
        TimedWord w = random_word(rng, word_letters(f));
        ClockValuation a{{"x", Rational(0)}, {"y", Rational(0)}};
        ClockValuation b{{"x", Rational(3, 2)}, {"y", Rational(7, 3)}};
        REQUIRE(eval_tptl(w, 1, a, f) == eval_tptl(w, 1, b, f));
    }
}

TEST_CASE("derived operators and normalization preserve meaning") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_fragment_formula(rng);
        Formula n = normalize(f);
        Formula neg = negate(f);
        for (int k = 0; k < 4; ++k) {
            TimedWord w = random_word(rng, word_letters(f));
            bool v = language_member(w, f);
            REQUIRE(language_member(w, n) == v);
            REQUIRE(language_member(w, neg) == !v);
            REQUIRE(eval_tptl(w, 1, {}, Formula::finally(f)) == eval_tptl(w, 1, {}, Formula::until(Formula::top(), f)));
            REQUIRE(eval_tptl(w, 1, {}, Formula::next(f)) == eval_tptl(w, 1, {}, Formula::until(Formula::bottom(), f)));
        }
    }
}
