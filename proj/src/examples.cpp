#include "gitstab/examples.hpp"

#include <algorithm>
#include <sstream>

namespace gitstab {

namespace {

Facet facet(std::vector<int> I, int c, FacetKind k) { return Facet{std::move(I), Rational(c), k}; }

ControlMatrix control(int rows, std::vector<WeightVector> cols) { return ControlMatrix{rows, std::move(cols)}; }

}  // namespace

std::vector<GoldenExample> golden_examples()
{
    std::vector<GoldenExample> out;
    {
        const int N = 3;
        out.push_back({"generic N=3", Support::from_entries(N, {{4, 1}}), "DDDDRRRR",
                       control(N, {{-1, -1, -1}}),
                       {facet({1}, -1, FacetKind::F1B), facet({2}, -1, FacetKind::F1B),
                        facet({3}, -1, FacetKind::F1B)}});
        out.push_back({"most-degenerate N=3", Support::from_entries(N, {{1, 4}}), "RRRDRDDD",
                       control(N, {{1, 1, 1}}),
                       {facet({1}, 1, FacetKind::F2B), facet({2}, 1, FacetKind::F2B),
                        facet({3}, 1, FacetKind::F2B)}});
        out.push_back({"main-stair N=3", Support::from_entries(N, {{1, 1}, {2, 2}, {3, 3}, {4, 4}}), "DRDRDRDR",
                       control(N, {{0, 0, 0}}),
                       {facet({1}, 0, FacetKind::F1A), facet({2}, 0, FacetKind::F1A),
                        facet({3}, 0, FacetKind::F1A)}});
    }
    out.push_back({"lower-stair N=2", Support::from_entries(2, {{2, 1}, {3, 2}}), "DDRDRR",
                   control(2, {{-1, 0}, {0, -1}}),
                   {facet({1}, -1, FacetKind::F1B), facet({2}, -1, FacetKind::F1B),
                    facet({1, 2}, -1, FacetKind::F1B)}});
    out.push_back({"upper-stair N=2", Support::from_entries(2, {{1, 2}, {2, 3}}), "RDRDRD",
                   control(2, {{1, 0}, {0, 1}}),
                   {facet({1}, 0, FacetKind::F2A), facet({2}, 0, FacetKind::F2A),
                    facet({1, 2}, 1, FacetKind::F2B)}});
    {
        std::vector<Facet> fs{facet({5}, 0, FacetKind::F1A), facet({6}, 0, FacetKind::F1A)};
        for (std::vector<int> I : std::vector<std::vector<int>>{
                 {1}, {2}, {3}, {4}, {7}, {1, 3}, {1, 4}, {1, 7}, {1, 3, 7}, {1, 4, 7}})
            fs.push_back(facet(I, -1, FacetKind::F1B));
        out.push_back({"lower path N=7", Support::from_entries(7, {{3, 1}, {5, 2}, {8, 7}}), "DDDRDDRRRRDRDDRR",
                       control(7, {{-1, -1, 0, 0, 0, 0, 0}, {0, -1, -1, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, -1}}),
                       fs});
    }
    out.push_back({"strictly upper 5x5", Support::from_entries(4, {{1, 3}, {2, 4}}), "RRDRDRRDDD",
                   control(4, {{1, 1, 0, 0}, {0, 1, 1, 0}}),
                   {facet({1}, 0, FacetKind::F2A), facet({3}, 0, FacetKind::F2A), facet({4}, 0, FacetKind::F2A),
                    facet({2}, 1, FacetKind::F2B), facet({1, 3}, 1, FacetKind::F2B)}});
    return out;
}

std::string to_string(const Facet& f)
{
    std::ostringstream os;
    os << to_string(f.kind) << " {";
    for (std::size_t k = 0; k < f.I.size(); ++k)
        os << (k ? "," : "") << f.I[k];
    os << "} >= " << to_string(f.c);
    return os.str();
}

std::string to_string(const ControlMatrix& c)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < c.columns.size(); ++k) {
        os << (k ? " " : "") << "(";
        for (std::size_t i = 0; i < c.columns[k].size(); ++i)
            os << (i ? "," : "") << c.columns[k][i];
        os << ")";
    }
    os << "]";
    return os.str();
}

ExampleCheck check_example(const GoldenExample& ex)
{
    ExampleCheck r;
    r.name = ex.name;
    const std::string word = profile(ex.support).word();
    r.profile_ok = word == ex.profile_word;
    if (!r.profile_ok)
        r.diff.push_back("profile " + word + " expected " + ex.profile_word);
    const ControlMatrix ctrl = control_matrix(ex.support);
    r.control_ok = ctrl == ex.control;
    if (!r.control_ok)
        r.diff.push_back("control " + to_string(ctrl) + " expected " + to_string(ex.control));

    auto key = [](const Facet& f) { return std::make_pair(f.I, f.c); };
    auto sorted = [&](std::vector<Facet> v) {
        std::sort(v.begin(), v.end(), [&](const Facet& a, const Facet& b) { return key(a) < key(b); });
        return v;
    };
    const auto got = sorted(corner_facets(ex.support).facets());
    const auto want = sorted(ex.facets);
    r.facets_ok = got == want;
    for (const auto& f : got)
        if (std::find(want.begin(), want.end(), f) == want.end())
            r.diff.push_back("extra facet " + to_string(f));
    for (const auto& f : want)
        if (std::find(got.begin(), got.end(), f) == got.end())
            r.diff.push_back("missing facet " + to_string(f));
    return r;
}

}  // namespace gitstab
