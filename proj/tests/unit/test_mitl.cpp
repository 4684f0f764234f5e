#include <catch_amalgamated.hpp>

#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/fragment.hpp"
#include "tptl/mitl.hpp"
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

bool is_modal(const MitlFormula& f) {
    return f.op() == MitlOp::Until || f.op() == MitlOp::Finally || f.op() == MitlOp::Globally;
}

// Bounded intervals stay within l >= 1, u <= 3 and are never nested inside
// one another; deeper nesting makes the translation too large to evaluate.
bool tractable(const MitlFormula& f, bool under_bounded = false) {
    bool bounded = false;
    if (is_modal(f)) {
        const Interval& i = f.interval();
        bounded = i.upper.has_value() && !(i.lower == 0 && i.lower_closed);
        if (bounded && (under_bounded || i.lower < 1 || *i.upper > 3)) return false;
    }
    for (const auto& k : f.kids())
        if (!tractable(k, under_bounded || bounded)) return false;
    return true;
}
}  // namespace

TEST_CASE("MITL parsing and printing") {
    MitlFormula f = parse_mitl("a U[1,2) b");
    CHECK(f.op() == MitlOp::Until);
    CHECK(f.interval() == Interval(1, 2, true, false));
    CHECK(parse_mitl(f.to_string()).to_string() == f.to_string());
    CHECK(parse_mitl("F b").interval() == Interval::everything());
    CHECK(parse_mitl("G(0,3] !a").op() == MitlOp::Globally);
    CHECK_THROWS_AS(parse_mitl("F[1,1] b"), PunctualInterval);
    CHECK_THROWS_AS(parse_mitl("F[0.5,2) b"), NonIntegerBound);
}

TEST_CASE("MITL evaluation") {
    CHECK(eval_mitl(W("a@0 b@0.5"), 1, parse_mitl("F[0,1) b")));
    CHECK_FALSE(eval_mitl(W("a@0 b@1.5"), 1, parse_mitl("F[0,1) b")));
    CHECK(eval_mitl(W("a@0 b@1 b@1.8"), 1, parse_mitl("F[1,2) b")));
    CHECK(eval_mitl(W("a@0 a@0.5 b@1.2"), 1, parse_mitl("a U[1,2) b")));
    CHECK_FALSE(eval_mitl(W("a@0 c@0.5 b@1.2"), 1, parse_mitl("a U[1,2) b")));
    CHECK(eval_mitl(W("a@0 a@0.5"), 1, parse_mitl("G[0,1) a")));
    CHECK_THROWS_AS(eval_mitl(W("a@0"), 2, parse_mitl("a")), PositionOutOfRange);
}

TEST_CASE("naive embedding") {
    CHECK(mtl_to_tptl(parse_mitl("a U[1,2] b")) == parse_tptl("x.(a U (b & x in [1,2]))"));
    CHECK(mtl_to_tptl(parse_mitl("F[0,1) b")) == parse_tptl("x.(true U (b & x < 1))"));
    CHECK(mtl_to_tptl(parse_mitl("a")) == parse_tptl("a"));
    Rng rng(21);
    std::vector<std::string> atoms{"a", "b"};
    for (int i = 0; i < 300; ++i) {
        MitlFormula f = random_mitl(rng, 3, 3, atoms);
        Formula t = mtl_to_tptl(f);
        for (int k = 0; k < 5; ++k) {
            TimedWord w = random_word(rng, {"a", "b", "z"});
            REQUIRE(eval_mitl(w, 1, f) == language_member(w, t));
        }
    }
}

TEST_CASE("unilateral intervals translate directly") {
    CHECK(mitl_to_tptl0inf(parse_mitl("F[0,2) b")) == parse_tptl("x.F(b & x < 2)"));
    CHECK(mitl_to_tptl0inf(parse_mitl("F(1,inf) b")) == parse_tptl("x.F(b & x > 1)"));
    CHECK(mitl_to_tptl0inf(parse_mitl("a U b")) == parse_tptl("a U b"));
}

TEST_CASE("bounded intervals translate into the fragment and keep their meaning") {
    Rng rng(22);
    std::vector<std::string> shapes{"[1,2)", "(1,2)", "[1,2]", "(1,2]", "[0,3)", "(0,2]", "[2,3]", "(1,3)"};
    for (const auto& s : shapes) {
        for (const std::string& body : {"F" + s + " b", "a U" + s + " b", "G" + s + " a"}) {
            MitlFormula f = parse_mitl(body);
            Formula t = mitl_to_tptl0inf(f);
            INFO(body << " -> " << t.to_string());
            REQUIRE(t.is_closed());
            REQUIRE(classify(t).in_fragment);
            for (int k = 0; k < 150; ++k) {
                TimedWord w = random_word(rng, {"a", "b", "z"});
                INFO(w.to_text());
                REQUIRE(eval_mitl(w, 1, f) == language_member(w, t));
            }
        }
    }
}

TEST_CASE("random MITL formulas translate soundly") {
    Rng rng(23);
    std::vector<std::string> atoms{"a", "b"};
    for (int i = 0; i < 120; ++i) {
        MitlFormula f = random_mitl(rng, 3, 2, atoms);
        while (!tractable(f)) f = random_mitl(rng, 3, 2, atoms);
        Formula t = mitl_to_tptl0inf(f);
        INFO(f.to_string());
        REQUIRE(classify(t).in_fragment);
        for (int k = 0; k < 8; ++k) {
            TimedWord w = random_word(rng, {"a", "b", "z"});
            INFO(w.to_text());
            REQUIRE(eval_mitl(w, 1, f) == language_member(w, t));
        }
    }
}

TEST_CASE("approach points are a unit apart") {
    Formula app = approach_formula(Formula::atom("b"));
    Rng rng(24);
    for (int k = 0; k < 400; ++k) {
        TimedWord w = random_word(rng, {"b", "z"});
        std::optional<Rational> last;
        for (std::size_t p = 1; p <= w.size(); ++p) {
            if (!eval_tptl(w, p, {}, app)) continue;
            if (last) REQUIRE(w.at(p).time - *last >= Rational(1));
            last = w.at(p).time;
        }
    }
}
