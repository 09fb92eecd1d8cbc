#include "doctest.h"

#include "gitstab/sweep.hpp"

using namespace gitstab;

namespace {

Vector vec(const Field& f, std::vector<long long> xs)
{
    Vector v;
    for (auto x : xs)
        v.push_back(f.from_int(x));
    return v;
}

MarkedMap random_map(const Field& f, int N, int n, std::mt19937_64& rng)
{
    const std::size_t dim = static_cast<std::size_t>(N) + 1;
    Matrix T;
    do
        T = random_matrix(f, dim, dim, rng);
    while (T.is_zero());
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(random_vector(f, dim, rng));
    return MarkedMap(ProjectiveMatrix(T), pts);
}

// x^4 + x + 1 is irreducible over GF(2), so every nonzero vector is cyclic.
Matrix companion_gf2_n3(const Field& f)
{
    return Matrix::from_ints(f, {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
}

}  // namespace

TEST_CASE("two points at a fixed point on the line")
{
    const Field q = Field::rationals();
    MarkedMap mm(ProjectiveMatrix(Matrix::from_ints(q, {{1, 0}, {0, 2}})), {vec(q, {1, 0}), vec(q, {1, 0})});
    auto v = check_stability(mm, Sheaf::uniform(1, 2), Mode::Exact);
    CHECK(v.status == Status::Unstable);
    REQUIRE(v.witness);
    CHECK(v.witness->type == FlagType::TypeI);
    CHECK(v.witness->omega == 1);
}

TEST_CASE("omega of a flag avoiding every point")
{
    const Field q = Field::rationals();
    std::vector<Vector> pts{vec(q, {0, 0, 1}), vec(q, {0, 1, 1})};
    Flag f({span(q, {vec(q, {1, 0, 0})}, 3), span(q, {vec(q, {1, 0, 0}), vec(q, {1, 1, 0})}, 3)});
    CHECK(omega(pts, {1, 2}, f) == Rational(-3));
    auto e = eta(pts, {1, 2}, 2);
    CHECK(e == RationalVector{Rational(-1), Rational(-2)});
}

TEST_CASE("exact verdicts match the Hilbert-Mumford oracle, GF(3), N = 1")
{
    const Field f = Field::prime(3);
    for (int n = 1; n <= 2; ++n)
        for (int q = 1; q <= 2; ++q) {
            auto r = compare_with_oracle(all_marked_maps(f, 1, n), Sheaf::uniform(q, static_cast<std::size_t>(n)));
            CHECK_MESSAGE(r.ok(), (r.mismatches.empty() ? "" : r.mismatches.front()));
        }
}

TEST_CASE("oracle basis modes agree")
{
    std::mt19937_64 rng(23);
    const Field f = Field::prime(2);
    for (int trial = 0; trial < 30; ++trial) {
        MarkedMap mm = random_map(f, 2, 1 + trial % 2, rng);
        Sheaf s = Sheaf::uniform(1 + trial % 2, mm.points.size());
        CHECK(hilbert_mumford_oracle(mm, s, OracleBases::AllBases).status
              == hilbert_mumford_oracle(mm, s, OracleBases::FlagBases).status);
    }
    CHECK(oracle_basis_count(2, 2, OracleBases::AllBases) == 168);
    CHECK(oracle_basis_count(2, 2, OracleBases::FlagBases) == 21);
}

TEST_CASE("serial and parallel flag evaluation give identical verdicts")
{
    std::mt19937_64 rng(29);
    const Field f = Field::prime(2);
    for (int trial = 0; trial < 20; ++trial) {
        MarkedMap mm = random_map(f, 2, 3, rng);
        Sheaf s = Sheaf::uniform(2, 3);
        auto a = check_stability(mm, s, Mode::Exact, 1000000, Execution::Serial);
        auto b = check_stability(mm, s, Mode::Exact, 1000000, Execution::Parallel);
        CHECK(a.status == b.status);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (a.witness && b.witness)
            CHECK(a.witness->flag == b.witness->flag);
    }
}

TEST_CASE("one-point closed form matches flag enumeration")
{
    for (auto [f, N] : std::vector<std::pair<Field, int>>{{Field::prime(2), 1}, {Field::prime(2), 2}, {Field::prime(3), 1}})
            for (int q = 1; q <= 2; ++q) {
                auto flags = enumerate_flags(f, N, N);
                for (const auto& mm : all_marked_maps(f, N, 1)) {
                    Sheaf s = Sheaf::uniform(q, 1);
                    CHECK(one_point_criterion(mm, s).status == evaluate_flags(mm, s, flags).status);
                }
            }
}

TEST_CASE("line family matches flag enumeration on the projective line")
{
    std::mt19937_64 rng(31);
    for (const Field f : {Field::prime(3), Field::prime(5)}) {
        auto flags = enumerate_flags(f, 1, 1);
        for (int trial = 0; trial < 300; ++trial) {
            MarkedMap mm = random_map(f, 1, 1 + trial % 4, rng);
            Sheaf s(1 + trial % 3, std::vector<int>(mm.points.size(), 1 + trial % 2));
            CHECK(line_criterion(mm, s).status == evaluate_flags(mm, s, flags).status);
        }
        for (const auto& mm : all_marked_maps(f, 1, 2))
            for (int q = 1; q <= 2; ++q)
                CHECK(line_criterion(mm, Sheaf::uniform(q, 2)).status
                      == evaluate_flags(mm, Sheaf::uniform(q, 2), flags).status);
    }
}

TEST_CASE("search mode is sound")
{
    std::mt19937_64 rng(37);
    const Field f = Field::prime(3);
    for (int trial = 0; trial < 60; ++trial) {
        MarkedMap mm = random_map(f, 2, 1 + trial % 3, rng);
        Sheaf s = Sheaf::uniform(1 + trial % 2, mm.points.size());
        auto search = check_stability(mm, s, Mode::Search);
        auto exact = check_stability(mm, s, Mode::Exact);
        if (search.status == Status::UnstableCertified) {
            CHECK(exact.status == Status::Unstable);
            REQUIRE(search.witness);
            CHECK(search.witness->omega > search.witness->bound);
        } else {
            CHECK(search.status == Status::NoViolationInFamily);
            CHECK_FALSE(search.witness);
        }
    }
}

TEST_CASE("point configurations under the identity")
{
    const Field q = Field::rationals();
    auto line = [&](std::vector<std::vector<long long>> ps) {
        std::vector<Vector> out;
        for (auto& p : ps)
            out.push_back(vec(q, p));
        return out;
    };
    std::vector<int> m(4, 1);
    CHECK(mumford_config(line({{1, 0}, {0, 1}, {1, 1}, {1, 2}}), m, 1).status == Status::Stable);
    CHECK(mumford_config(line({{1, 0}, {2, 0}, {1, 1}, {1, 2}}), m, 1).status == Status::StrictlySemistable);
    CHECK(mumford_config(line({{1, 0}, {2, 0}, {3, 0}, {1, 2}}), m, 1).status == Status::Unstable);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int N = 1 + trial % 2;
        const std::size_t dim = static_cast<std::size_t>(N) + 1;
        std::vector<Vector> pts;
        for (int i = 0; i < 4; ++i)
            pts.push_back(trial % 3 == 0 && i == 1 ? pts[0] : random_vector(q, dim, rng, 1));
        MarkedMap mm(ProjectiveMatrix(Matrix::identity(q, dim)), pts);
        CHECK(check_stability(mm, Sheaf::uniform(1, 4), Mode::Exact).status
              == mumford_config(pts, m, N).status);
    }
}

TEST_CASE("one cyclic point: stable only on the line")
{
    // Hilbert-Mumford oracle, no flag theory: v cyclic for an invertible T, q = 1.
    const Field f2 = Field::prime(2), f5 = Field::prime(5);
    MarkedMap n1(ProjectiveMatrix(Matrix::from_ints(f5, {{1, 0}, {0, 2}})), {vec(f5, {1, 1})});
    CHECK(hilbert_mumford_oracle(n1, Sheaf::uniform(1, 1)).status == Status::Stable);
    MarkedMap n2(ProjectiveMatrix(Matrix::from_ints(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})), {vec(f5, {1, 1, 1})});
    CHECK(hilbert_mumford_oracle(n2, Sheaf::uniform(1, 1), OracleBases::FlagBases).status
          == Status::StrictlySemistable);
    MarkedMap n3(ProjectiveMatrix(companion_gf2_n3(f2)), {vec(f2, {1, 0, 0, 0})});
    CHECK(hilbert_mumford_oracle(n3, Sheaf::uniform(1, 1), OracleBases::FlagBases).status == Status::Unstable);
    CHECK(one_point_criterion(n2, Sheaf::uniform(1, 1)).status == Status::StrictlySemistable);
    CHECK(one_point_criterion(n3, Sheaf::uniform(1, 1)).status == Status::Unstable);
    CHECK(one_point_criterion(n3, Sheaf::uniform(2, 1)).status == Status::Stable);
}

TEST_CASE("stable witness")
{
    for (int n = 1; n <= 3; ++n)
        CHECK(check_stability(stable_witness(1, n, n), Sheaf::uniform(n, static_cast<std::size_t>(n)), Mode::Exact)
                  .status
              == Status::Stable);
    CHECK_THROWS(stable_witness(2, 3, 2));
}

TEST_CASE("companion form")
{
    const Field q = Field::rationals();
    Matrix T = Matrix::from_ints(q, {{2, 1, 0}, {0, 1, 1}, {1, 0, 3}});
    Vector v = vec(q, {1, 0, 0});
    auto c = characteristic_polynomial(T);
    auto alpha = companion_coefficients(T, v);
    REQUIRE(alpha.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(alpha[i] == -c[i]);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix A = random_invertible(q, 3, rng);
        CHECK(companion_form(A * T * inverse(A), A * v) == companion_form(T, v));
    }
    CHECK_THROWS_AS(companion_form(Matrix::identity(q, 3), v), NotCyclic);
}

TEST_CASE("moduli coordinates are conjugation and scale invariant")
{
    const Field q = Field::rationals();
    Matrix T = Matrix::from_ints(q, {{1, 0, 0}, {0, 2, 0}, {0, 0, -3}});
    MarkedMap mm(ProjectiveMatrix(T), {vec(q, {1, 1, 1}), vec(q, {1, 2, 3}), vec(q, {0, 1, 5})});
    auto base = moduli_coordinates(mm);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        MarkedMap c = conjugate(mm, random_invertible(q, 3, rng));
        Matrix scaled = c.T.matrix();
        scaled *= q.from_int(trial + 2);
        CHECK(moduli_coordinates(MarkedMap(ProjectiveMatrix(scaled), c.points)) == base);
    }
    MarkedMap rep(ProjectiveMatrix(Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), mm.points);
    CHECK_THROWS_AS(moduli_coordinates(rep), NotGeneric);
}

TEST_CASE("rational roots")
{
    // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
    CHECK(rational_roots({Rational(0), Rational(-3, 2), Rational(5, 2), Rational(1)})
          == std::vector<Rational>{Rational(-3), Rational(0), Rational(1, 2)});
    CHECK(rational_roots({Rational(-2), Rational(0), Rational(1)}).empty());
}
