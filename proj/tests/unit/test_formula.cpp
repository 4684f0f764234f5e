#include <catch_amalgamated.hpp>

#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/formula.hpp"
#include "tptl/fragment.hpp"
#include "tptl/normalize.hpp"
#include "tptl/parser.hpp"

using namespace tptl;

namespace {
Formula P(const std::string& s) { return parse_tptl(s); }
}  // namespace

TEST_CASE("parser builds the expected trees") {
    Formula f = P("x.(a U (b U (c & x in [1,2])))");
    REQUIRE(f.op() == Op::Freeze);
    CHECK(f.clocks() == ClockSet{"x"});
    REQUIRE(f.child().op() == Op::Until);
    CHECK(f.child().lhs() == Formula::atom("a"));
    const Formula& inner = f.child().rhs();
    REQUIRE(inner.op() == Op::Until);
    CHECK(inner.rhs() == Formula::conj(Formula::atom("c"), Formula::constraint("x", Interval::closed(1, 2))));

    Formula run = P("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))");
    REQUIRE(run.op() == Op::Globally);
    CHECK(run.child().op() == Op::Or);
    CHECK(run.child().lhs() == Formula::neg_atom("a"));
    CHECK(run.is_closed());

    CHECK(P("T - x <= 2 & x.a").lhs() == Formula::constraint("x", Interval::at_most(2)));
    CHECK(P("x = 1") == Formula::constraint("x", Interval::closed(1, 1)));
    CHECK(P("{y,x}.F(x > 1 & y < 3)").clocks() == ClockSet{"x", "y"});
    CHECK(P("true") == Formula::top());
    CHECK(P("!true") == Formula::bottom());
    CHECK(P("!(a & F b)") == Formula::disj(Formula::neg_atom("a"), Formula::globally(Formula::neg_atom("b"))));
}

TEST_CASE("parser reports errors with positions") {
    CHECK_THROWS_AS(P("T"), ParseError);
    CHECK_THROWS_AS(P("a U"), ParseError);
    CHECK_THROWS_AS(P("a U b U c"), ParseError);
    CHECK_THROWS_AS(P("x in [2,1"), ParseError);
    CHECK_THROWS_AS(P("a $ b"), ParseError);
    try {
        P("a &\n  & b");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("printer output re-parses to the same tree") {
    for (const char* s : {"x.(a U (b U (c & x in [1,2])))", "G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))",
                          "{x,y}.(a U (b & x <= 3 & y >= 5))", "(a | b) & (c U !a)", "X X a", "x.F(b & x in (1,inf))",
                          "false | true", "x.(a U (x > 1 | x < 1))"}) {
        Formula f = P(s);
        CHECK(P(f.to_string()) == f);
    }
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_fragment_formula(rng);
        REQUIRE(P(f.to_string()) == f);
    }
}

TEST_CASE("formula size") {
    CHECK(formula_size(P("x.(a & b U (c | x in (1,2)))")) == 8);
    CHECK(formula_size(P("a")) == 0);
    CHECK(formula_size(P("a U b")) == 1);
    CHECK(formula_size(P("x.F(a & x <= 0)")) == 3 + 2);
    CHECK(formula_size(P("x.F(a & x <= 4)")) == 3 + 2 * 3);
}

TEST_CASE("pushing freezes") {
    Formula f = P("x.(a U y.(b & y in (2,3) | x in (1,2)) & a & x in [0,1))");
    CHECK(push_freezes(f) == Formula::mk_and(P("x.(a U x in (1,2))"), P("a")));
    CHECK(push_freezes(P("a U b")) == P("a U b"));
    CHECK(push_freezes(P("x.(F a | x in (0,1))")) == P("F a"));
    CHECK(push_freezes(P("x.y.F(x <= 1)")) == P("x.F(x <= 1)"));
}

TEST_CASE("strict closure") {
    Formula f = P("x.y.(a & x.F(a & x in (0,1)))");
    CHECK(strictly_close(f, {"x", "y"}) == P("x.y.(a & {x,y}.F(a & x in (0,1)))"));
    CHECK(normalize(P("a U b")) == P("a U b"));
    Formula n = normalize(P("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))"));
    CHECK(n == P("{x,y}.G(!a | {x,y}.F(a & x<=2 & y.X(b & x<=3 & y<=2)))"));
    CHECK(is_normalized(n));
    CHECK_FALSE(is_normalized(P("G a & x.F(x <= 1)")));
    CHECK_THROWS_AS(normalize(P("F(x <= 1)")), OpenFormula);
}

TEST_CASE("fragment classification") {
    auto ok = classify(P("x.y.(a U (b U (c & x < 3 & y <= 2 & x.(X(c & x > 1)))))"));
    CHECK(ok.in_fragment);
    CHECK(ok.offenders.empty());

    auto bad = classify(P("x.y.(a U (b & x <= 3 & y >= 5))"));
    CHECK_FALSE(bad.in_fragment);
    REQUIRE(bad.offenders.size() == 1);
    CHECK(bad.offenders[0].subformula == P("b & x <= 3 & y >= 5"));

    auto plain = classify(P("a U b"));
    CHECK(plain.in_fragment);
    REQUIRE_FALSE(plain.entries.empty());
    CHECK(plain.entries[0].path == "root");
    CHECK(plain.entries[0].tag == FragmentTag::Both);

    CHECK_FALSE(classify(P("x.F(a & x in [1,2])")).in_fragment);
    CHECK(classify(P("x.F(a & x >= 1) & x.F(b & x <= 1)")).in_fragment);
}

TEST_CASE("negation normal form") {
    CHECK(negate(P("a U b")) == P("G !b | (!b U (!a & !b))"));
    CHECK(negate(negate(P("x.F(a & x <= 2)"))) == P("x.F(a & x <= 2)"));
    CHECK(negate(P("x.F(a & x < 1)")) == P("x.G(!a | x >= 1)"));
    CHECK(negate(P("X a")) == P("G false | X !a"));
}
