#include "doctest.h"

#include "gitstab/examples.hpp"
#include "gitstab/sweep.hpp"

using namespace gitstab;

TEST_CASE("worked examples")
{
    for (const auto& ex : golden_examples()) {
        CAPTURE(ex.name);
        ExampleCheck c = check_example(ex);
        CHECK(c.profile_ok);
        CHECK(c.control_ok);
        if (ex.name == "lower path N=7") {
            // The reference list misses three F-1B facets; verify_corner certifies them.
            CHECK_FALSE(c.facets_ok);
            CHECK(c.diff == std::vector<std::string>{"extra facet F-1B {2,7} >= -1", "extra facet F-1B {3,7} >= -1",
                                                     "extra facet F-1B {4,7} >= -1"});
            CHECK(verify_corner(ex.support).ok());
        } else
            CHECK(c.facets_ok);
    }
}

TEST_CASE("lower and upper staircases")
{
    for (int N = 1; N <= 4; ++N) {
        std::vector<Entry> lo, up;
        for (int i = 1; i <= N; ++i) {
            lo.push_back({i + 1, i});
            up.push_back({i, i + 1});
        }
        auto pl = corner_facets(Support::from_entries(N, lo));
        auto pu = corner_facets(Support::from_entries(N, up));
        CHECK(pl.facets().size() == (std::size_t{1} << N) - 1);
        // For N = 1 the upper staircase is the most degenerate pattern, with a single facet.
        CHECK(pu.facets().size() == (N == 1 ? 1 : static_cast<std::size_t>(N) + 1));
        CHECK(pl.vertices().size() == static_cast<std::size_t>(N));
    }
}

TEST_CASE("corner membership")
{
    std::vector<WeightVector> pts{{-1, 0}, {0, -1}};
    CHECK(corner_membership(pts, WeightVector{0, 0}, true));
    CHECK(corner_membership(pts, WeightVector{-1, 0}, false));
    CHECK_FALSE(corner_membership(pts, WeightVector{-1, 0}, true));
    CHECK_FALSE(corner_membership(pts, WeightVector{-1, -1}, false));
    std::vector<RationalVector> q{{Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
    CHECK(corner_membership(q, RationalVector{Rational(-1, 2), Rational(-1, 2)}, false));
    CHECK_FALSE(corner_membership(q, RationalVector{Rational(-1, 2), Rational(-1, 2)}, true));
    CHECK(corner_membership(q, RationalVector{Rational(-1, 2), Rational(-1, 3)}, true));
}

TEST_CASE("membership agrees with the facet system")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int N = 1; N <= 3; ++N) {
        const std::uint64_t total = (std::uint64_t{1} << ((N + 1) * (N + 1))) - 1;
        std::uniform_int_distribution<std::uint64_t> pick(1, total);
        for (int trial = 0; trial < 200; ++trial) {
            Support s = Support::from_mask(N, pick(rng));
            CornerPolyhedron p = corner_facets(s);
            RationalVector x;
            for (int i = 0; i < N; ++i)
                x.push_back(Rational(d(rng), 3));
            auto raw = raw_weights(s);
            std::vector<RationalVector> rq;
            for (const auto& w : raw)
                rq.push_back(to_rational(w));
            CHECK(corner_membership(rq, x, false) == p.satisfies(x, false));
            CHECK(corner_membership(rq, x, true) == p.satisfies(x, true));
        }
    }
}

TEST_CASE("Minkowski translate")
{
    auto ray = corner_facets(Support::from_entries(1, {{2, 1}}));
    auto t = minkowski_translate(ray, {Rational(1, 2)}, 2);
    REQUIRE(t.facets().size() == 1);
    CHECK(t.facets()[0].c == Rational(-3, 2));
    auto up = corner_facets(Support::from_entries(2, {{1, 2}, {2, 3}}));
    auto u = minkowski_translate(up, {Rational(0), Rational(0)}, 3);
    REQUIRE(u.facets().size() == 3);
    CHECK(u.facets()[0].c == 0);
    CHECK(u.facets()[1].c == 0);
    CHECK(u.facets()[2].c == 3);
}

TEST_CASE("closed forms match the LP oracle on every small support")
{
    for (int N = 1; N <= 2; ++N) {
        const std::uint64_t total = (std::uint64_t{1} << ((N + 1) * (N + 1))) - 1;
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            CornerCheck c = verify_corner(Support::from_mask(N, mask));
            CAPTURE(mask);
            CHECK_MESSAGE(c.ok(), c.describe());
        }
    }
}

TEST_CASE("serial and parallel corner sweeps agree")
{
    auto a = verify_corner_family(2, Execution::Serial);
    auto b = verify_corner_family(2, Execution::Parallel);
    CHECK(a.ok());
    CHECK(a.matrices == 511);
    CHECK(a.failures == b.failures);
    CHECK(a.distinct_systems == b.distinct_systems);
    CHECK(a.distinct_systems == 9);
}

TEST_CASE("bijection between profiles and corner polyhedra")
{
    for (int N = 1; N <= 2; ++N) {
        auto s = census(N, true, Execution::Serial);
        auto p = census(N, true, Execution::Parallel);
        CHECK(s.ok());
        CHECK(s.realized_profiles == s.profiles);
        CHECK(s.distinct_polyhedra == p.distinct_polyhedra);
    }
}

TEST_CASE("polyhedron validation")
{
    CHECK_THROWS(CornerPolyhedron(1, {{Rational(0)}}, {Facet{{1}, Rational(1), FacetKind::F1A}}));
    CHECK_THROWS(CornerPolyhedron(1, {{Rational(1)}}, {Facet{{1}, Rational(0), FacetKind::F1A}}));
}
