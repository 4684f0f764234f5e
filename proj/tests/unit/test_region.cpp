#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tptl/compile.hpp"
#include "tptl/corpus.hpp"
#include "tptl/errors.hpp"
#include "tptl/normalize.hpp"
#include "tptl/nta.hpp"
#include "tptl/parser.hpp"
#include "tptl/region.hpp"
#include "tptl/semantics.hpp"

using namespace tptl;

namespace {
Nta build(const std::string& s) { return subsetize(compile_tptl_to_vwata(normalize(parse_tptl(s))).ata); }

Nta single_clock(std::vector<CopyGuard> guards) {
    Nta n;
    n.clocks = {"x"};
    n.alphabet = {"a"};
    n.ata_locations = {"q", "done"};
    n.copies_per_clock = 1;
    NtaLocation l0{{std::vector<int>{0}, std::nullopt}, {{0}}};
    NtaLocation l1{{std::nullopt, std::vector<int>{0}}, {{0}}};
    n.locations = {l0, l1};
    n.accepting = {false, true};
    n.transitions = {{0, 0, std::move(guards), {}, 1}};
    n.outgoing = {{0}, {}};
    return n;
}
}  // namespace

TEST_CASE("regions of valuations") {
    Region z = region_of({Rational(0), Rational(0)}, 3);
    CHECK(z.int_part == std::vector<int>{0, 0});
    CHECK(z.frac_rank == std::vector<int>{0, 0});
    Region h = region_of({Rational(1, 2)}, 2);
    CHECK(h.int_part == std::vector<int>{0});
    CHECK(h.frac_rank == std::vector<int>{1});
    Region big = region_of({Rational(9, 2), Rational(7, 5)}, 3);
    CHECK(big.int_part == std::vector<int>{4, 1});
    CHECK(region_of({Rational(13, 10), Rational(27, 10)}, 3) == region_of({Rational(11, 10), Rational(29, 10)}, 3));
    CHECK(region_of({Rational(13, 10), Rational(27, 10)}, 3) != region_of({Rational(18, 10), Rational(22, 10)}, 3));
}

TEST_CASE("time successors walk the diagonal") {
    std::vector<std::int64_t> caps{1, 1};
    Region r = region_of({Rational(0), Rational(1, 2)}, caps, {true, true});
    int steps = 0;
    while (auto s = time_successor(r, caps)) {
        r = *s;
        ++steps;
        REQUIRE(steps < 20);
    }
    CHECK(r.int_part == std::vector<int>{2, 2});
    CHECK(steps == 5);
}

TEST_CASE("region soundness against guards") {
    Rng rng(71);
    std::uniform_int_distribution<int> v(0, 20);
    std::vector<Interval> guards{Interval::at_most(1), Interval::below(2), Interval::at_least(1), Interval::above(2),
                                 Interval::at_most(0), Interval::above(0)};
    for (int i = 0; i < 4000; ++i) {
        std::vector<Rational> a{Rational(v(rng), 5), Rational(v(rng), 4)}, b{Rational(v(rng), 5), Rational(v(rng), 4)};
        Region ra = region_of(a, 3), rb = region_of(b, 3);
        for (const auto& g : guards)
            for (int c = 0; c < 2; ++c) {
                REQUIRE(region_satisfies(ra, c, g) == g.contains(a[c]));
                if (ra == rb) REQUIRE(g.contains(a[c]) == g.contains(b[c]));
            }
        if (ra == rb) {
            auto sa = time_successor(ra, {3, 3});
            auto sb = time_successor(rb, {3, 3});
            REQUIRE(sa == sb);
        }
    }
}

TEST_CASE("region graph basics") {
    Nta free = single_clock({});
    RegionGraph g = build_region_graph(free);
    CHECK(g.nodes.size() >= 2);
    Nta dead = single_clock({{0, 0, Interval::open(1, 1)}});
    RegionGraph gd = build_region_graph(dead);
    for (const auto& e : gd.edges) CHECK(e.transition < 0);
    CHECK_FALSE(check_emptiness(dead).sat);

    Nta late = single_clock({{0, 0, Interval::at_least(2)}});
    auto r = check_emptiness(late);
    REQUIRE(r.sat);
    CHECK(r.witness->at(1).time == Rational(2));
    Nta strict = single_clock({{0, 0, Interval::above(2)}});
    auto rs = check_emptiness(strict);
    REQUIRE(rs.sat);
    CHECK(rs.witness->at(1).time > Rational(2));
    CHECK(rs.witness->at(1).time < Rational(3));
    auto rf = check_emptiness(free);
    REQUIRE(rf.sat);
    CHECK(rf.witness->at(1).time == Rational(0));
}

TEST_CASE("emptiness on formulas") {
    auto sat = [](const std::string& s) { return check_emptiness(build(s)); };
    auto a = sat("a");
    REQUIRE(a.sat);
    CHECK(a.witness->at(1).symbol == "a");
    CHECK_FALSE(sat("a & !a").sat);
    CHECK_FALSE(sat("x.F(a & x <= 1) & G(!a)").sat);
    auto late = sat("x.F(a & x >= 2)");
    REQUIRE(late.sat);
    bool found = false;
    for (const auto& e : late.witness->entries())
        if (e.symbol == "a" && e.time >= Rational(2)) found = true;
    CHECK(found);
    CHECK(language_member(*late.witness, parse_tptl("x.F(a & x >= 2)")));

    Nta running = build("G(!a | x.(F(a & x<=2 & y.X(b & x<=3 & y<=2))))");
    RegionGraph g = build_region_graph(running);
    CHECK(static_cast<long double>(g.nodes.size()) <= nta_stats(running).region_bound);
    RegionOptions tiny;
    tiny.state_cap = 3;
    CHECK_THROWS_AS(build_region_graph(running, tiny), StateCapExceeded);
    CHECK(region_graph_to_dot(running, g).find("digraph") != std::string::npos);
}

TEST_CASE("emptiness agrees with bounded grid search") {
    Rng rng(72);
    for (int i = 0; i < 40; ++i) {
        Formula f = random_fragment_formula(rng);
        auto r = check_emptiness(subsetize(compile_tptl_to_vwata(normalize(f)).ata));
        INFO(f.to_string());
        if (r.sat) {
            REQUIRE(language_member(*r.witness, f));
        } else {
            oracle::GridOptions o;
            o.max_length = 3;
            o.denominator = 2;
            o.max_time = max_constant(f) + 1;
            REQUIRE_FALSE(oracle::grid_model(f, word_letters(f), o));
        }
    }
}
