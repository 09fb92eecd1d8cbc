#include "doctest.h"

#include "gitstab/examples.hpp"
#include "gitstab/sweep.hpp"

using namespace gitstab;

TEST_CASE("profiles of small matrices")
{
    CHECK(profile(Support::from_entries(1, {{1, 2}})).word() == "RDRD");
    CHECK(profile(Support::from_entries(1, {{2, 1}})).word() == "DDRR");
    CHECK(profile(Support::from_entries(1, {{1, 1}})).word() == "DRDR");
    CHECK(profile(Support::from_entries(3, {{1, 1}, {2, 3}, {1, 4}})).word() == "DRDRDRDR");
    CHECK_THROWS_AS(profile(Support(2)), TrivialProfile);
    CHECK_THROWS(Profile("DRD"));
    CHECK_THROWS(Profile("RRDD"));
}

TEST_CASE("profile count is 2 C_{N+1} - 1")
{
    CHECK(enumerate_profiles(1).size() == 3);
    CHECK(enumerate_profiles(2).size() == 9);
    CHECK(enumerate_profiles(3).size() == 27);
    CHECK(enumerate_profiles(4).size() == 83);
    CHECK(catalan(5) == 42);
}

TEST_CASE("profile contains the support and is the smallest such path")
{
    for (int N = 1; N <= 2; ++N) {
        auto all = enumerate_profiles(N);
        const std::uint64_t total = (std::uint64_t{1} << ((N + 1) * (N + 1))) - 1;
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            Support s = Support::from_mask(N, mask);
            Profile p = profile(s);
            for (const auto& e : s.entries())
                CHECK(p.contains(e));
            CHECK((p.orientation() == Orientation::Upper) == s.strictly_upper_triangular());
            // Any other admissible path of the same orientation containing the support lies above p.
            for (const auto& other : all) {
                if (other.orientation() != p.orientation())
                    continue;
                bool holds = true;
                for (const auto& e : s.entries())
                    holds = holds && other.contains(e);
                if (!holds)
                    continue;
                auto a = p.down_columns(), b = other.down_columns();
                for (std::size_t i = 0; i < a.size(); ++i)
                    CHECK(a[i] >= b[i]);
            }
        }
    }
}

TEST_CASE("entry weights and outweighing")
{
    CHECK(entry_weight(3, 1, 3) == WeightVector{-1, -1, 0});
    CHECK(entry_weight(1, 3, 3) == WeightVector{1, 1, 0});
    CHECK(entry_weight(2, 2, 3) == WeightVector{0, 0, 0});
    CHECK(outweighs({3, 4}, {2, 4}, 3));
    CHECK_FALSE(outweighs({2, 4}, {3, 4}, 3));
    CHECK(outweighs({2, 4}, {1, 4}, 3));
    CHECK(outweighs({2, 2}, {1, 3}, 3));
    CHECK_FALSE(outweighs({1, 3}, {2, 2}, 3));
    CHECK_FALSE(outweighs({1, 3}, {3, 1}, 3));
    // Strict domination of weight vectors; diagonal entries share the weight 0.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int k = 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l) {
                    auto a = entry_weight(i, j, 3), b = entry_weight(k, l, 3);
                    CHECK(outweighs({i, j}, {k, l}, 3) == (a != b && dominates(a, b)));
                }
}

TEST_CASE("minimal entries")
{
    auto m = minimal_entries(Support::from_entries(2, {{2, 1}, {3, 2}, {1, 3}, {3, 3}}));
    CHECK(m == std::vector<Entry>{{2, 1}, {3, 2}});
}

TEST_CASE("pivotal entries")
{
    CHECK(pivotal_entries(Profile("DDDRDDRRRRDRDDRR")) == std::vector<Entry>{{3, 1}, {5, 2}, {6, 6}, {8, 7}});
    CHECK(pivotal_entries(Profile("RDRDRD")) == std::vector<Entry>{{1, 2}, {2, 3}});
}

TEST_CASE("control matrices")
{
    CHECK(control_matrix(Support::from_entries(2, {{2, 1}, {3, 2}})).columns
          == std::vector<WeightVector>{{-1, 0}, {0, -1}});
    CHECK(control_matrix(Support::from_entries(4, {{1, 3}, {2, 4}})).columns
          == std::vector<WeightVector>{{1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(control_matrix(Support::from_entries(2, {{1, 1}})).columns == std::vector<WeightVector>{{0, 0}});
    // Control columns are the vertices found by the LP.
    for (int N = 1; N <= 2; ++N) {
        const std::uint64_t total = (std::uint64_t{1} << ((N + 1) * (N + 1))) - 1;
        for (std::uint64_t mask = 1; mask <= total; ++mask) {
            Support s = Support::from_mask(N, mask);
            auto cols = control_matrix(s).columns;
            std::sort(cols.begin(), cols.end());
            CHECK(cols == oracle_vertices(raw_weights(s)));
        }
    }
}

TEST_CASE("projection of the control matrix")
{
    Support lower = Support::from_entries(2, {{2, 1}, {3, 2}});
    CHECK(verts_projection(lower, {1}).columns == std::vector<WeightVector>{{-1}});
    CHECK(verts_projection(lower, {1, 2}).columns == std::vector<WeightVector>{{-1, 0}, {0, -1}});
}
