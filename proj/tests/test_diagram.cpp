#include "doctest.h"

#include <algorithm>
#include <random>

#include "fpb/basket.hpp"
#include "fpb/bracket.hpp"
#include "fpb/diagram.hpp"

using namespace fpb;

TEST_CASE("arc diagram crossing counts") {
    CHECK(build_arc_diagram(parse_code("")).crossings.empty());
    CHECK(build_arc_diagram(parse_code("1122")).crossings.empty());
    CHECK(build_arc_diagram(parse_code("1212")).crossings.size() == 4);
    CHECK(build_arc_diagram(parse_code("12341234")).crossings.size() == 24);
}

TEST_CASE("arc diagram structure") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<int> w;
        for (int k = 1; k <= n; ++k) {
            w.push_back(k);
            w.push_back(k);
        }
        std::shuffle(w.begin(), w.end(), rng);
        BasketCode c{w};
        ArcDiagram d = build_arc_diagram(c);
        CHECK(d.components == component_count(c));

        int pairs = 0;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (interleaved(c, a, b)) ++pairs;
        CHECK(static_cast<int>(d.crossings.size()) == 4 * pairs);

        int cups = 0, caps = 0, crossings = 0;
        for (const auto& ev : d.events) {
            if (ev.kind == SweepEvent::kCup) ++cups;
            if (ev.kind == SweepEvent::kCap) ++caps;
            if (ev.kind == SweepEvent::kCross) ++crossings;
        }
        CHECK(cups == n + 1);
        CHECK(caps == n + 1);
        CHECK(crossings == static_cast<int>(d.crossings.size()));

        // every band pair contributes crossings with net zero sign
        int total_sign = 0;
        for (const auto& cr : d.crossings) total_sign += cr.sign;
        CHECK(d.writhe() == total_sign);

        size_t visit_total = 0;
        for (const auto& v : d.visits) visit_total += v.size();
        CHECK(visit_total == 2 * d.crossings.size());
    }
}

TEST_CASE("sweep bracket agrees with the state sum") {
    std::mt19937 rng(4040);
    int tested = 0;
    while (tested < 60) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<int> w;
        for (int k = 1; k <= n; ++k) {
            w.push_back(k);
            w.push_back(k);
        }
        std::shuffle(w.begin(), w.end(), rng);
        ArcDiagram d = build_arc_diagram(BasketCode{w});
        if (d.crossings.size() > 14) continue;
        ++tested;
        CHECK(sweep_bracket(d.events) == naive_bracket(d.flat));
    }
}

TEST_CASE("bracket basics") {
    CHECK(sweep_bracket({}).is_one());
    CHECK(kauffman_bracket(build_arc_diagram(parse_code(""))).is_one());

    // k disjoint loops
    CrossingDiagram loops;
    loops.free_loops = 3;
    LaurentPoly delta;
    delta.set_coeff(2, -1);
    delta.set_coeff(-2, -1);
    CHECK(naive_bracket(loops) == delta * delta);

    // single kink: one crossing, segments 0 and 1, both strands the same loop
    CrossingDiagram kink;
    kink.num_segments = 2;
    DiagramCrossing cr;
    cr.in_over = 0;
    cr.out_over = 1;
    cr.in_under = 1;
    cr.out_under = 0;
    cr.sign = 1;
    kink.crossings.push_back(cr);
    LaurentPoly k = naive_bracket(kink);
    bool pos = (k == LaurentPoly::monomial(-1, 3)) || (k == LaurentPoly::monomial(-1, -3));
    CHECK(pos);
}

TEST_CASE("jones values") {
    CHECK(jones(build_arc_diagram(parse_code("1212"))).is_one());

    LaurentPoly tref = jones(build_arc_diagram(parse_code("12341234")));
    LaurentPoly right, left;
    right.set_coeff(-4, -1);
    right.set_coeff(-3, 1);
    right.set_coeff(-1, 1);
    left = right.inverted();
    CHECK((tref == right || tref == left));

    LaurentPoly fig8 = jones(build_arc_diagram(parse_code("12431243")));
    LaurentPoly expect;
    expect.set_coeff(-2, 1);
    expect.set_coeff(-1, -1);
    expect.set_coeff(0, 1);
    expect.set_coeff(1, -1);
    expect.set_coeff(2, 1);
    CHECK(fig8 == expect);
}

TEST_CASE("gauss codes") {
    CHECK(gauss_code(build_arc_diagram(parse_code(""))).empty());

    GaussCode g = gauss_code(build_arc_diagram(parse_code("1212")));
    CHECK(g.size() == 8);
    std::vector<int> count(5, 0);
    for (const auto& e : g) {
        CHECK(e.id >= 1);
        CHECK(e.id <= 4);
        ++count[e.id];
    }
    for (int id = 1; id <= 4; ++id) CHECK(count[id] == 2);

    CHECK(gauss_code(build_arc_diagram(parse_code("12341234"))).size() == 48);
    CHECK_THROWS_AS(gauss_code(build_arc_diagram(parse_code("11"))), std::invalid_argument);

    GaussCode r = parse_gauss(gauss_to_string(g));
    CHECK(r.size() == g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        CHECK(r[i].id == g[i].id);
        CHECK(r[i].over == g[i].over);
        CHECK(r[i].sign == g[i].sign);
    }
    CHECK_THROWS_AS(parse_gauss("O1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gauss("O1+,U1-"), std::invalid_argument);
}

TEST_CASE("gauss starts are rotations of one traversal") {
    ArcDiagram d = build_arc_diagram(parse_code("1212"));
    GaussCode base = gauss_code(d, 0, false);
    for (int s = 1; s < 4; ++s) {
        GaussCode g = gauss_code(d, s, false);
        CHECK(g.size() == base.size());
    }
    GaussCode rev = gauss_code(d, 0, true);
    CHECK(rev.size() == base.size());
}

TEST_CASE("dt codes") {
    CHECK(dt_from_gauss({}).empty());

    // the 7-crossing pairing with every even visit an underpass
    std::vector<std::pair<int, int>> pairs = {{1, 12}, {3, 8}, {5, 10}, {7, 14},
                                              {9, 4},  {11, 2}, {13, 6}};
    GaussCode g(14);
    for (size_t id = 0; id < pairs.size(); ++id) {
        auto [odd, even] = pairs[id];
        g[odd - 1] = {static_cast<int>(id) + 1, true, 1};
        g[even - 1] = {static_cast<int>(id) + 1, false, 1};
    }
    CHECK(dt_to_string(dt_from_gauss(g)) == "12 8 10 14 4 2 6");

    CHECK(parse_dt("12 8 10 14 4 2 6").size() == 7);
    CHECK(parse_dt("4 6 2") == std::vector<int>{4, 6, 2});
    CHECK_THROWS_AS(parse_dt("3 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dt("4 4 2"), std::invalid_argument);
}

TEST_CASE("r-move simplification") {
    GaussCode kink = parse_gauss("O1+,U1+");
    CHECK(simplify_r_moves(kink).empty());

    CHECK(simplify_r_moves(gauss_code(build_arc_diagram(parse_code("1212")))).empty());

    GaussCode tref = simplify_r_moves(gauss_code(build_arc_diagram(parse_code("12341234"))));
    CHECK(tref.size() >= 6);
    CHECK(tref.size() % 2 == 0);
}
