#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lensgrid/moves.hpp"
#include "oracle_grid.hpp"
#include "support.hpp"

using namespace lensgrid;

TEST_CASE("d squared and degree laws on random diagrams")
{
    std::mt19937 rng(101);
    int checked = 0;
    for (int t = 0; t < 220; ++t) {
        auto g = testing::random_diagram(rng, 5, 3);
        CAPTURE(serialize_diagram(g));
        ChainComplex cx(g, {});
        auto d2 = verify_d_squared(cx);
        CHECK(d2.ok);
        CHECK(verify_degree_laws(cx).ok);
        checked += d2.ok;
    }
    CHECK(checked >= 200);
}

TEST_CASE("p = 1 engine agrees with the classical grid oracle")
{
    std::mt19937 rng(103);
    for (int t = 0; t < 40; ++t) {
        GridDiagram g;
        do g = testing::random_knot(rng, 1, 5, 2);
        while (g.p != 1);
        std::vector<int> o, x;
        for (int b = 0; b < g.n; ++b) {
            o.push_back(g.O[b].a);
            x.push_back(g.X[b].a);
        }
        CAPTURE(serialize_diagram(g));
        auto h = homology(g);
        CHECK(testing::knot_bigraded(h) == oracle::grid_homology(o, x));
        CHECK(h.total() % (1LL << (g.n - 1)) == 0);
    }
}

TEST_CASE("orientation reversal: generator-wise bijection and homology")
{
    std::mt19937 rng(107);
    for (int t = 0; t < 60; ++t) {
        auto g = testing::random_knot(rng, 5, 2);
        CAPTURE(serialize_diagram(g));
        auto rg = reverse_orientation(g);
        GradingEngine fwd(g), rev(rg);
        int k = mod(testing::base_generator_m(g, Family::O) - testing::base_generator_m(g, Family::X), g.p);
        for (const auto& x : generators(g)) {
            auto a = fwd.grading(x), b = rev.grading(x);
            const Rational& A = a.alexander[0];
            CHECK(b.spin == mod(a.spin + k, g.p));
            CHECK(b.maslov == a.maslov - 2 * A - (g.n - 1));
            CHECK(b.alexander[0] == -A - (g.n - 1));
        }
        auto rep = compare_orientation(g);
        CHECK(rep.k == k);
        CHECK(rep.holds);
    }
}

static void check_invariance(const GridDiagram& g, AlexanderNormalization norm, std::mt19937& rng)
{
    ComplexOptions opt;
    opt.norm = norm;
    auto h = homology(g, opt);
    for (Axis axis : {Axis::columns, Axis::rows}) {
        int shift = std::uniform_int_distribution<int>(1, g.width())(rng);
        CHECK(testing::equal_up_to_relabel(homology(cycle(g, axis, shift), opt), h));
        if (g.n < 2) continue;
        for (int c = 0; c < g.n; ++c)
            if (!is_interleaving(g, c, axis)) {
                CHECK(testing::equal_up_to_relabel(homology(commute(g, c, axis), opt), h));
                break;
            }
    }
    int marking = std::uniform_int_distribution<int>(0, g.n - 1)(rng);
    for (Family fam : {Family::X, Family::O})
        for (Corner corner : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
            int j = testing::component_of(g, marking, fam);
            auto hs = homology(stabilize(g, marking, fam, corner), opt);
            CHECK(hs.total() == 2 * h.total());
            CHECK(testing::equal_up_to_relabel(hs, testing::tensor_v(h, j)));
        }
}

TEST_CASE("move invariance on random knots")
{
    std::mt19937 rng(109);
    for (int t = 0; t < 25; ++t) {
        auto g = testing::random_knot(rng, 5, 2);
        CAPTURE(serialize_diagram(g));
        check_invariance(g, AlexanderNormalization::standard, rng);
    }
}

TEST_CASE("move invariance on random links with the symmetric normalization")
{
    std::mt19937 rng(113);
    int done = 0;
    while (done < 20) {
        auto g = testing::random_diagram(rng, 4, 2, 2);
        if (trace_components(g).size() < 2) continue;
        CAPTURE(serialize_diagram(g));
        check_invariance(g, AlexanderNormalization::symmetric, rng);
        ++done;
    }
}

TEST_CASE("the default normalization moves link tables under a row cycle")
{
    // documents the known deviation: the cross terms shift each Alexander entry by 1/4 here
    auto lb = testing::fixture("lb");
    auto h = homology(lb), hc = homology(cycle(lb, Axis::rows, 1));
    CHECK(h.total() == hc.total());
    CHECK_FALSE(testing::equal_up_to_relabel(hc, h));
}
