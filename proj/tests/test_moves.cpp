#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lensgrid/moves.hpp"
#include "support.hpp"

using namespace lensgrid;

static std::multiset<int> class_multiset(const GridDiagram& g)
{
    auto c = trace_components(g).classes;
    return {c.begin(), c.end()};
}

TEST_CASE("corner tags")
{
    for (auto s : {"NW", "NE", "SW", "SE"}) CHECK(to_string(parse_corner(s)) == s);
    CHECK_THROWS_AS(parse_corner("N"), DiagramError);
}

TEST_CASE("column cycles")
{
    auto g1 = testing::fixture("g1");
    CHECK(cycle(g1, Axis::columns, g1.width()) == g1);
    CHECK(cycle(g1, Axis::columns, 1) == GridDiagram{5, 2, 1, {{1, 0}}, {{3, 0}}});
    CHECK(cycle(cycle(g1, Axis::columns, 3), Axis::columns, -3) == g1);
}

TEST_CASE("row cycles follow the twisted gluing")
{
    auto lb = testing::fixture("lb");
    auto once = cycle(lb, Axis::rows, 1);
    // (a, n-1) -> (a - qn, 0)
    CHECK(once == testing::diagram(4, 1, 2, {{1, 1}, {6, 0}}, {{3, 1}, {4, 0}}));
    auto full = cycle(lb, Axis::rows, lb.n);
    GridDiagram shifted = lb;
    for (auto* fam : {&shifted.O, &shifted.X})
        for (auto& m : *fam) m.a = mod(m.a - lb.q * lb.n, lb.width());
    CHECK(full == canonical(shifted));
    CHECK(cycle(once, Axis::rows, -1) == lb);

    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        auto g = testing::random_diagram(rng, 1, 4);
        CHECK(cycle(g, Axis::rows, g.n) == g);
    }
}

TEST_CASE("interleaving by definition")
{
    // p = 1: column heights are rows. Columns 0 and 1 hold heights {0,2} and {1,3}.
    auto inter = testing::diagram(1, 0, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}, {{2, 0}, {3, 1}, {0, 2}, {1, 3}});
    CHECK(is_interleaving(inter, 0, Axis::columns));
    CHECK_THROWS_AS(commute(inter, 0, Axis::columns), MoveRefused);
    // columns 0 and 1 hold heights {0,1} and {2,3}
    auto apart = testing::diagram(1, 0, 4, {{0, 0}, {2, 1}, {3, 2}, {1, 3}}, {{3, 0}, {0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(is_interleaving(apart, 0, Axis::columns));
    auto c = commute(apart, 0, Axis::columns);
    CHECK(c == testing::diagram(1, 0, 4, {{1, 0}, {2, 1}, {3, 2}, {0, 3}}, {{3, 0}, {1, 1}, {0, 2}, {2, 3}}));
    CHECK(commute(c, 0, Axis::columns) == apart);

    CHECK_THROWS_AS(is_interleaving(testing::fixture("g1"), 0, Axis::columns), DiagramError);
    CHECK_THROWS_AS(is_interleaving(apart, 4, Axis::columns), DiagramError);
}

TEST_CASE("commutation is an involution and keeps the pair non-interleaving")
{
    std::mt19937 rng(29);
    int done = 0;
    for (int t = 0; t < 400; ++t) {
        auto g = testing::random_diagram(rng, 5, 4, 2);
        for (Axis axis : {Axis::columns, Axis::rows}) {
            int c = std::uniform_int_distribution<int>(0, g.n - 1)(rng);
            if (is_interleaving(g, c, axis)) {
                CHECK_THROWS_AS(commute(g, c, axis), MoveRefused);
                continue;
            }
            auto h = commute(g, c, axis);
            CHECK(validate(h).ok());
            CHECK_FALSE(is_interleaving(h, c, axis));
            CHECK(commute(h, c, axis) == g);
            CHECK(class_multiset(h) == class_multiset(g));
            CHECK(trace_components(h).size() == trace_components(g).size());
            ++done;
        }
    }
    CHECK(done > 100);
}

TEST_CASE("cycles preserve components and classes")
{
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        auto g = testing::random_diagram(rng, 5, 4);
        for (Axis axis : {Axis::columns, Axis::rows}) {
            auto h = cycle(g, axis, std::uniform_int_distribution<int>(-7, 7)(rng));
            CHECK(validate(h).ok());
            CHECK(class_multiset(h) == class_multiset(g));
        }
    }
}

TEST_CASE("all eight stabilizations of the first knot")
{
    auto g1 = testing::fixture("g1");
    auto h1 = homology(g1);
    REQUIRE(h1.total() == 5);
    for (Family fam : {Family::X, Family::O})
        for (Corner corner : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
            CAPTURE(to_string(corner));
            CAPTURE(fam == Family::X);
            auto s = stabilize(g1, 0, fam, corner);
            CHECK(s.n == 2);
            CHECK(s.width() == 10);
            CHECK(validate(s).ok());
            CHECK(class_multiset(s) == class_multiset(g1));
            auto hs = homology(s);
            CHECK(hs.total() == 10);
            CHECK(testing::same_rows(hs, testing::tensor_v(h1, 0)));
            CHECK(destabilize(s, testing::block_site(g1, 0, fam)) == g1);
        }
}

TEST_CASE("stabilize then destabilize on random diagrams")
{
    std::mt19937 rng(37);
    for (int t = 0; t < 150; ++t) {
        auto g = testing::random_diagram(rng, 5, 3);
        int marking = std::uniform_int_distribution<int>(0, g.n - 1)(rng);
        Family fam = rng() % 2 ? Family::X : Family::O;
        Corner corner = static_cast<Corner>(rng() % 4);
        auto s = stabilize(g, marking, fam, corner);
        CHECK(s.n == g.n + 1);
        CHECK(class_multiset(s) == class_multiset(g));
        CHECK(destabilize(s, testing::block_site(g, marking, fam)) == g);
    }
}

TEST_CASE("destabilization halves the homology")
{
    auto g2 = testing::fixture("g2");
    auto s = stabilize(g2, 0, Family::O, Corner::SE);
    auto d = destabilize(s, testing::block_site(g2, 0, Family::O));
    CHECK(homology(s).total() == 2 * homology(d).total());
}

TEST_CASE("destabilization errors")
{
    CHECK_THROWS_AS(destabilize(testing::fixture("g1"), {0, 0}), DiagramError);
    CHECK_THROWS_WITH_AS(destabilize(testing::fixture("lb"), {0, 0}), doctest::Contains("pattern mismatch"),
                         DiagramError);
    CHECK_THROWS_AS(stabilize(testing::fixture("g1"), 1, Family::X, Corner::NW), DiagramError);
}

TEST_CASE("move specs dispatch")
{
    auto g1 = testing::fixture("g1");
    MoveSpec m;
    m.kind = MoveSpec::Kind::stabilize;
    m.family = Family::O;
    m.corner = Corner::NE;
    auto s = apply_move(g1, m);
    CHECK(s == stabilize(g1, 0, Family::O, Corner::NE));
    MoveSpec d;
    d.kind = MoveSpec::Kind::destabilize;
    d.site = testing::block_site(g1, 0, Family::O);
    CHECK(apply_move(s, d) == g1);
    MoveSpec c;
    c.kind = MoveSpec::Kind::cycle;
    c.axis = Axis::columns;
    c.index = 2;
    CHECK(apply_move(g1, c) == cycle(g1, Axis::columns, 2));
}
