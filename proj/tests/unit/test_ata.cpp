#include <catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "tptl/ata.hpp"
#include "tptl/ata_semantics.hpp"
#include "tptl/compile.hpp"
#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/normalize.hpp"
#include "tptl/parser.hpp"

using namespace tptl;
using TF = TransitionFormula;

namespace {

// Two clocks x (0) and y (1), one letter "a" unless given.
Ata skeleton(int locations, std::vector<std::string> alphabet = {"a"}) {
    Ata a;
    for (int q = 0; q < locations; ++q) a.locations.push_back("q" + std::to_string(q));
    a.alphabet = std::move(alphabet);
    a.clocks = {"x", "y"};
    a.accepting.assign(locations, false);
    a.delta.assign(locations, std::vector<TF>(a.alphabet.size(), TF::bottom()));
    return a;
}

Valuation V(Rational x, Rational y) { return {x, y}; }

std::vector<Configuration> sorted(std::vector<Configuration> v) {
    for (auto& c : v) c = make_configuration(c);
    std::sort(v.begin(), v.end());
    return v;
}

TF random_tf(Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 5), loc(0, 3), mask(1, 3), k(0, 3);
    if (depth == 0) {
        switch (pick(rng) % 3) {
            case 0: return TF::location(loc(rng));
            case 1: return TF::bind(static_cast<ClockMask>(mask(rng)), loc(rng));
            default: return TF::guard(k(rng) % 2, k(rng) % 2 ? Interval::at_most(k(rng)) : Interval::at_least(k(rng)));
        }
    }
    std::vector<TF> parts{random_tf(rng, depth - 1), random_tf(rng, depth - 1)};
    return pick(rng) % 2 ? TF::conj(parts) : TF::disj(parts);
}

}  // namespace

TEST_CASE("minimal models of simple formulas") {
    Valuation nu = V(Rational(1), Rational(2));
    auto m = minimal_models(TF::conj({TF::location(0), TF::bind(1, 1)}), nu);
    REQUIRE(m.size() == 1);
    CHECK(m[0] == make_configuration({{0, nu}, {1, V(0, 2)}}));

    CHECK(sorted(minimal_models(TF::disj({TF::location(1), TF::location(2)}), nu)) ==
          sorted({make_configuration({{1, nu}}), make_configuration({{2, nu}})}));

    TF t = TF::disj({TF::conj({TF::bind(2, 2), TF::guard(0, Interval::at_most(2))}), TF::location(1)});
    auto at3 = minimal_models(t, V(3, 0));
    CHECK(sorted(at3) == sorted(oracle::brute_minimal_models(t, V(3, 0))));
    CHECK(at3 == std::vector<Configuration>{make_configuration({{1, V(3, 0)}})});

    CHECK(minimal_models(TF::bottom(), nu).empty());
    CHECK(minimal_models(TF::top(), nu) == std::vector<Configuration>{Configuration{}});
}

TEST_CASE("minimal models match subset enumeration") {
    Rng rng(31);
    std::uniform_int_distribution<int> v(0, 8);
    for (int i = 0; i < 600; ++i) {
        TF t = random_tf(rng, 1 + i % 3);
        Valuation nu = V(Rational(v(rng), 2), Rational(v(rng), 2));
        auto got = sorted(minimal_models(t, nu));
        REQUIRE(got == sorted(oracle::brute_minimal_models(t, nu)));
        for (const auto& c : got)
            for (const auto& d : got)
                if (c != d) REQUIRE_FALSE(std::includes(c.begin(), c.end(), d.begin(), d.end()));
    }
}

TEST_CASE("very weak conditions") {
    Ata ok = skeleton(2);
    ok.delta[0][0] = TF::conj({TF::location(0), TF::bind(1, 1)});
    ok.delta[1][0] = TF::location(1);
    CHECK(validate_vwata(ok).ok);

    Ata loop = skeleton(1);
    loop.delta[0][0] = TF::bind(1, 0);
    auto r2 = validate_vwata(loop);
    CHECK_FALSE(r2.ok);
    CHECK(r2.violated_condition == 2);

    Ata tree = skeleton(4);
    tree.delta[0][0] = TF::conj({TF::location(1), TF::location(2)});
    tree.delta[1][0] = TF::bind(1, 3);
    tree.delta[2][0] = TF::bind(2, 3);
    auto r3 = validate_vwata(tree);
    CHECK_FALSE(r3.ok);
    CHECK(r3.violated_condition == 3);

    Ata cyc = skeleton(2);
    cyc.delta[0][0] = TF::location(1);
    cyc.delta[1][0] = TF::location(0);
    auto r1 = validate_vwata(cyc);
    CHECK_FALSE(r1.ok);
    CHECK(r1.violated_condition == 1);
}

TEST_CASE("side partition") {
    Ata g = skeleton(2);
    g.delta[0][0] = TF::conj({TF::location(0), TF::bind(1, 1)});
    g.delta[1][0] = TF::disj({TF::location(1), TF::guard(0, Interval::at_most(2))});
    auto p = validate_unilateral(g);
    CHECK(p[1] == Side::Le);
    CHECK(p[0] == Side::Le);

    Ata bad = skeleton(1);
    bad.delta[0][0] = TF::disj({TF::guard(0, Interval::at_most(2)), TF::guard(0, Interval::at_least(3))});
    CHECK_THROWS_AS(validate_unilateral(bad), NoValidPartition);

    Ata free = skeleton(2);
    free.delta[0][0] = TF::location(1);
    free.delta[1][0] = TF::top();
    auto pf = validate_unilateral(free);
    CHECK(std::all_of(pf.begin(), pf.end(), [](Side s) { return s == Side::Ge; }));

    Ata cross = skeleton(2);
    cross.delta[0][0] = TF::conj({TF::guard(0, Interval::at_least(1)), TF::bind(1, 1)});
    cross.delta[1][0] = TF::guard(0, Interval::at_most(1));
    CHECK_THROWS_AS(validate_unilateral(cross), NoValidPartition);
    cross.delta[0][0] = TF::conj({TF::guard(0, Interval::at_least(1)), TF::bind(3, 1)});
    auto pc = validate_unilateral(cross);
    CHECK(pc[0] == Side::Ge);
    CHECK(pc[1] == Side::Le);
}

TEST_CASE("successors") {
    Ata a = skeleton(3);
    a.delta[0][0] = TF::conj({TF::location(0), TF::bind(1, 1)});
    a.delta[1][0] = TF::disj({TF::location(1), TF::location(2)});
    a.delta[2][0] = TF::disj({TF::location(2), TF::location(1)});
    Configuration c0 = initial_configuration(a);
    auto s = successors(a, c0, Rational(0), 0);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == make_configuration({{0, V(0, 0)}, {1, V(0, 0)}}));
    CHECK(successors(a, {}, Rational(1), 0) == std::vector<Configuration>{Configuration{}});

    // per-state choices multiply, duplicates collapse
    Configuration c = make_configuration({{0, V(1, 1)}, {1, V(1, 1)}, {2, V(1, 1)}});
    auto got = successors(a, c, Rational(1), 0);
    std::set<Configuration> direct;
    for (const auto& m0 : minimal_models(a.delta[0][0], V(2, 2)))
        for (const auto& m1 : minimal_models(a.delta[1][0], V(2, 2)))
            for (const auto& m2 : minimal_models(a.delta[2][0], V(2, 2))) {
                std::vector<AtaState> u(m0.begin(), m0.end());
                u.insert(u.end(), m1.begin(), m1.end());
                u.insert(u.end(), m2.begin(), m2.end());
                direct.insert(make_configuration(u));
            }
    CHECK(std::set<Configuration>(got.begin(), got.end()) == direct);
    CHECK(got.size() == direct.size());
}

TEST_CASE("acceptance on the running example") {
    Formula f = normalize(parse_tptl("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))"));
    Ata a = compile_tptl_to_vwata(f).ata;
    auto ok = ata_accepts(a, initial_configuration(a), TimedWord::parse_text("b@1/2"));
    CHECK(ok.accepted);
    REQUIRE(ok.run);
    CHECK(ok.run->levels().size() == 2);
    CHECK_FALSE(ata_accepts(a, initial_configuration(a), TimedWord::parse_text("a@0\na@0")).accepted);
    CHECK(ata_accepts(a, {}, TimedWord::parse_text("a@0\nb@1")).accepted);

    // started in the G location itself, the first letter is already constrained
    int g = 1;
    REQUIRE(a.locations.size() > 1);
    Configuration from_g = make_configuration({{g, V(0, 0)}});
    CHECK(ata_accepts(a, from_g, TimedWord::parse_text("b@1/2")).accepted);
    CHECK_FALSE(ata_accepts(a, from_g, TimedWord::parse_text("a@0")).accepted);

    RunDag fig = first_choice_run(a, initial_configuration(a), TimedWord::parse_text("a@0\na@1\na@3/2\nb@3/2"));
    CHECK(fig.levels().size() == 5);
    std::string dot = export_run_dag(fig, a);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find("(1,a)") != std::string::npos);
    RunDag empty;
    CHECK(export_run_dag(empty, a).find("digraph") != std::string::npos);
}

TEST_CASE("ATA JSON round trip and DOT") {
    Formula f = normalize(parse_tptl("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))"));
    Ata a = compile_tptl_to_vwata(f).ata;
    CHECK(ata_from_json(ata_to_json(a)) == a);
    Ata b = a;
    b.partition.reset();
    CHECK(ata_from_json(ata_to_json(b)) == b);
    CHECK(ata_to_dot(a).find("digraph") != std::string::npos);
}

TEST_CASE("monotone guards on unilateral automata") {
    Rng rng(32);
    std::uniform_int_distribution<int> v(0, 12);
    for (int i = 0; i < 100; ++i) {
        Formula f = random_fragment_formula(rng);
        Ata a = compile_tptl_to_vwata(normalize(f)).ata;
        auto side = validate_unilateral(a);
        for (int q = 0; q < a.num_locations(); ++q)
            for (const auto& tf : a.delta[q])
                for (const auto& cl : to_dnf(tf))
                    for (const auto& [x, iv] : cl.guards) {
                        Rational hi(v(rng), 3), lo = hi - Rational(v(rng), 4);
                        if (lo < Rational(0)) lo = Rational(0);
                        if (side[q] == Side::Le && iv.contains(hi)) REQUIRE(iv.contains(lo));
                        if (side[q] == Side::Ge && iv.contains(lo)) REQUIRE(iv.contains(hi));
                    }
    }
}
