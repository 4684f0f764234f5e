#include <catch_amalgamated.hpp>

#include "tptl/ata_semantics.hpp"
#include "tptl/compile.hpp"
#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/normalize.hpp"
#include "tptl/parser.hpp"
#include "tptl/semantics.hpp"

using namespace tptl;

namespace {
CompileOutput C(const std::string& s) { return compile_tptl_to_vwata(normalize(parse_tptl(s))); }

int location_with(const CompileOutput& c, Op op) {
    for (std::size_t q = 1; q < c.location_formula.size(); ++q)
        if (c.location_formula[q].op() == op) return static_cast<int>(q);
    return -1;
}
}  // namespace

TEST_CASE("running example compiles to the expected shape") {
    Formula f = parse_tptl("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))");
    CompileOutput c = compile_tptl_to_vwata(normalize(f));
    const Ata& a = c.ata;
    CHECK(static_cast<std::size_t>(a.num_locations()) <= formula_size(f) + 1);
    int g = location_with(c, Op::Globally), fin = location_with(c, Op::Finally), nx = location_with(c, Op::Next);
    REQUIRE(g > 0);
    REQUIRE(fin > 0);
    REQUIRE(nx > 0);
    CHECK(a.accepting[g]);
    CHECK_FALSE(a.accepting[fin]);
    CHECK_FALSE(a.accepting[nx]);
    CHECK(validate_vwata(a).ok);
    REQUIRE(a.partition);
    CHECK((*a.partition)[fin] == Side::Le);
    CHECK(a.alphabet == std::vector<std::string>{"a", "b", "_"});
}

TEST_CASE("smallest G formula") {
    CompileOutput c = C("G a");
    const Ata& a = c.ata;
    REQUIRE(a.num_locations() == 2);
    int ia = a.letter_index("a"), io = a.letter_index("zz");
    CHECK(a.delta[1][ia] == TransitionFormula::location(1));
    CHECK(a.delta[1][io] == TransitionFormula::bottom());
    CHECK(a.accepting[1]);
    CHECK(a.accepting[0]);
}

TEST_CASE("compile preconditions") {
    CHECK_THROWS_AS(compile_tptl_to_vwata(parse_tptl("F(x <= 1)")), OpenFormula);
    CHECK_THROWS_AS(compile_tptl_to_vwata(parse_tptl("x.F(a & x <= 1) & y.G b")), NotNormalized);
}

TEST_CASE("alphabet projection") {
    CompileOutput c = C("a U b");
    TimedWord w = TimedWord::parse_text("a@0\nq@1\nb@1");
    TimedWord p = alphabet_projection(c.ata, w);
    CHECK(p.at(2).symbol == "_");
    CHECK(p.at(1).symbol == "a");
    CHECK(alphabet_projection(c.ata, TimedWord()).empty());
    CHECK(ata_accepts(c.ata, initial_configuration(c.ata), p).accepted ==
          ata_accepts(c.ata, initial_configuration(c.ata), w).accepted);
}

TEST_CASE("compiled automata accept the formula's language") {
    Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        Formula f = random_fragment_formula(rng);
        CompileOutput c = compile_tptl_to_vwata(normalize(f));
        INFO(f.to_string());
        REQUIRE(static_cast<std::size_t>(c.ata.num_locations()) <= formula_size(f) + 1);
        REQUIRE(validate_vwata(c.ata).ok);
        REQUIRE_NOTHROW(validate_unilateral(c.ata));
        for (int k = 0; k < 4; ++k) {
            TimedWord w = random_word(rng, word_letters(f));
            INFO(w.to_text());
            REQUIRE(ata_accepts(c.ata, initial_configuration(c.ata), w).accepted == language_member(w, f));
        }
    }
}

TEST_CASE("Next agrees with bottom-until") {
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        Formula g = random_fragment_formula(rng);
        Formula nx = Formula::next(g), bu = Formula::until(Formula::bottom(), g);
        Ata a = compile_tptl_to_vwata(normalize(nx)).ata;
        Ata b = compile_tptl_to_vwata(normalize(bu)).ata;
        for (int k = 0; k < 4; ++k) {
            TimedWord w = random_word(rng, word_letters(g));
            REQUIRE(ata_accepts(a, initial_configuration(a), w).accepted ==
                    ata_accepts(b, initial_configuration(b), w).accepted);
        }
    }
}
