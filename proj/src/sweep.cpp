#include "gitstab/sweep.hpp"

#include "gitstab/lp.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace gitstab {

std::vector<WeightVector> oracle_vertices(const std::vector<WeightVector>& raw)
{
    std::vector<WeightVector> pts = raw;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<WeightVector> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        std::vector<WeightVector> rest;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != k)
                rest.push_back(pts[j]);
        if (rest.empty() || !corner_membership(rest, pts[k], false))
            out.push_back(pts[k]);
    }
    return out;
}

std::string CornerCheck::describe() const
{
    std::ostringstream os;
    os << "vertices_are_raw=" << vertices_are_raw << " vertices_extreme=" << vertices_extreme
       << " raw_in_vertex_corner=" << raw_in_vertex_corner << " raw_satisfy_facets=" << raw_satisfy_facets
       << " facets_tight=" << facets_tight << " facets_full_dim=" << facets_full_dim
       << " routes_agree=" << routes_agree << " kinds_ok=" << kinds_ok;
    return os.str();
}

namespace {

std::vector<RationalVector> as_rational(const std::vector<WeightVector>& ws)
{
    std::vector<RationalVector> out;
    for (const auto& w : ws)
        out.push_back(to_rational(w));
    return out;
}

}  // namespace

CornerCheck verify_corner(const Support& s)
{
    CornerCheck c;
    const int N = s.N();
    const Field Q = Field::rationals();
    CornerPolyhedron p = corner_facets(s);
    auto raw = raw_weights(s);
    auto raw_q = as_rational(raw);

    for (const auto& v : p.vertices()) {
        WeightVector w;
        for (const auto& x : v)
            w.push_back(numerator(x).convert_to<int>());
        if (!std::binary_search(raw.begin(), raw.end(), w)) {
            c.vertices_are_raw = false;
            continue;
        }
        std::vector<WeightVector> rest;
        for (const auto& r : raw)
            if (r != w)
                rest.push_back(r);
        if (!rest.empty() && corner_membership(rest, w, false))
            c.vertices_extreme = false;
    }
    for (const auto& r : raw_q) {
        if (!corner_membership(p.vertices(), r, false))
            c.raw_in_vertex_corner = false;
        if (!p.satisfies(r))
            c.raw_satisfy_facets = false;
    }
    const bool strict = s.strictly_upper_triangular();
    for (const auto& f : p.facets()) {
        Rational lo = s_I(f.I, raw_q.front());
        for (const auto& r : raw_q)
            lo = std::min(lo, s_I(f.I, r));
        if (lo != f.c)
            c.facets_tight = false;
        bool is2 = f.kind == FacetKind::F2A || f.kind == FacetKind::F2B;
        if (is2 != strict)
            c.kinds_ok = false;
        // Face = tight raw weights + rays e_i (i not in I).
        std::vector<Vector> dirs;
        const RationalVector* base = nullptr;
        for (const auto& r : raw_q) {
            if (s_I(f.I, r) != f.c)
                continue;
            if (!base) {
                base = &r;
                continue;
            }
            Vector d;
            for (int i = 0; i < N; ++i)
                d.push_back(Q.from_rational(r[static_cast<std::size_t>(i)] - (*base)[static_cast<std::size_t>(i)]));
            dirs.push_back(std::move(d));
        }
        for (int i = 1; i <= N; ++i)
            if (!std::binary_search(f.I.begin(), f.I.end(), i)) {
                Vector e(static_cast<std::size_t>(N), Q.zero());
                e[static_cast<std::size_t>(i - 1)] = Q.one();
                dirs.push_back(std::move(e));
            }
        if (span(Q, dirs, static_cast<std::size_t>(N)).dim() != static_cast<std::size_t>(N - 1))
            c.facets_full_dim = false;
    }
    c.routes_agree = facets_from_control(s) == p.facets();
    return c;
}

bool facet_system_complete(const CornerPolyhedron& p)
{
    const int N = p.dim();
    const auto& fs = p.facets();
    // Recession cone {d : s_I(d) >= 0} equals O+ iff every s_i is a nonnegative combination of the normals.
    for (int i = 1; i <= N; ++i) {
        std::vector<std::vector<Rational>> A(static_cast<std::size_t>(N), std::vector<Rational>(fs.size()));
        std::vector<Rational> b(static_cast<std::size_t>(N));
        for (std::size_t f = 0; f < fs.size(); ++f)
            for (int k : fs[f].I)
                A[static_cast<std::size_t>(k - 1)][f] = 1;
        b[static_cast<std::size_t>(i - 1)] = 1;
        if (solve_lp(A, b, std::vector<Rational>(fs.size())).status == LpStatus::Infeasible)
            return false;
    }
    // Vertices of the facet system: feasible unique solutions of N tight facets.
    const Field Q = Field::rationals();
    std::vector<std::size_t> pick;
    bool ok = true;
    auto check = [&] {
        Matrix A(Q, static_cast<std::size_t>(N), static_cast<std::size_t>(N) + 1);
        for (std::size_t r = 0; r < pick.size(); ++r) {
            for (int k : fs[pick[r]].I)
                A(r, static_cast<std::size_t>(k - 1)) = Q.one();
            A(r, static_cast<std::size_t>(N)) = Q.from_rational(fs[pick[r]].c);
        }
        std::size_t rk = 0;
        Matrix R = rref(A, &rk);
        if (rk != static_cast<std::size_t>(N) || !R(static_cast<std::size_t>(N) - 1, static_cast<std::size_t>(N) - 1).is_one())
            return;
        RationalVector x;
        for (int i = 0; i < N; ++i)
            x.push_back(R(static_cast<std::size_t>(i), static_cast<std::size_t>(N)).rational());
        if (p.satisfies(x) && !corner_membership(p.vertices(), x, false))
            ok = false;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!ok)
            return;
        if (pick.size() == static_cast<std::size_t>(N)) {
            check();
            return;
        }
        for (std::size_t f = from; f < fs.size(); ++f) {
            pick.push_back(f);
            rec(f + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return ok;
}

CornerSweepReport verify_corner_family(int N, Execution exec)
{
    CornerSweepReport rep;
    rep.N = N;
    const int cells = (N + 1) * (N + 1);
    if (cells > 20)
        throw std::invalid_argument("exhaustive corner sweep limited to 4x4 matrices");
    const std::uint64_t total = (std::uint64_t{1} << cells) - 1;
    rep.matrices = total;
    std::vector<char> ok(total, 0);
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&](std::uint64_t k) {
        try {
            ok[k] = verify_corner(Support::from_mask(N, k + 1)).ok();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err)
                err = std::current_exception();
        }
    };
    if (exec == Execution::Serial) {
        for (std::uint64_t k = 0; k < total; ++k)
            body(k);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long k = 0; k < static_cast<long long>(total); ++k)
            body(static_cast<std::uint64_t>(k));
    }
    if (err)
        std::rethrow_exception(err);
    std::map<std::pair<std::vector<RationalVector>, std::vector<std::pair<std::vector<int>, std::string>>>,
             CornerPolyhedron>
        systems;
    for (std::uint64_t k = 0; k < total; ++k) {
        Support s = Support::from_mask(N, k + 1);
        if (!ok[k]) {
            ++rep.failures;
            if (rep.notes.size() < 5)
                rep.notes.push_back("mask " + std::to_string(k + 1) + ": " + verify_corner(s).describe());
        }
        CornerPolyhedron p = corner_facets(s);
        std::vector<std::pair<std::vector<int>, std::string>> key;
        for (const auto& f : p.facets())
            key.emplace_back(f.I, f.c.str());
        systems.emplace(std::make_pair(p.vertices(), key), p);
    }
    rep.distinct_systems = systems.size();
    for (const auto& [key, p] : systems)
        if (!facet_system_complete(p)) {
            ++rep.incomplete_systems;
            if (rep.notes.size() < 10)
                rep.notes.push_back("facet system strictly larger than the corner");
        }
    return rep;
}

Integer catalan(int k)
{
    Integer c = 1;
    for (int i = 0; i < k; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

CensusReport census(int N, bool sweep, Execution exec)
{
    CensusReport rep;
    rep.N = N;
    rep.profiles = enumerate_profiles(N).size();
    rep.expected = 2 * catalan(N + 1) - 1;
    if (!sweep)
        return rep;
    const int cells = (N + 1) * (N + 1);
    if (cells > 20)
        throw std::invalid_argument("bijection sweep limited to 4x4 matrices");
    rep.swept = true;
    const std::uint64_t total = (std::uint64_t{1} << cells) - 1;
    rep.matrices = total;
    std::vector<std::string> words(total);
    std::vector<std::vector<WeightVector>> polys(total);
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&](std::uint64_t k) {
        try {
            Support s = Support::from_mask(N, k + 1);
            words[k] = profile(s).word();
            polys[k] = oracle_vertices(raw_weights(s));
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err)
                err = std::current_exception();
        }
    };
    if (exec == Execution::Serial) {
        for (std::uint64_t k = 0; k < total; ++k)
            body(k);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long k = 0; k < static_cast<long long>(total); ++k)
            body(static_cast<std::uint64_t>(k));
    }
    if (err)
        std::rethrow_exception(err);
    std::map<std::string, std::vector<WeightVector>> by_profile;
    std::set<std::vector<WeightVector>> distinct;
    for (std::uint64_t k = 0; k < total; ++k) {
        auto [it, fresh] = by_profile.emplace(words[k], polys[k]);
        if (!fresh && it->second != polys[k])
            rep.profile_determines_polyhedron = false;
        distinct.insert(polys[k]);
    }
    rep.realized_profiles = by_profile.size();
    rep.distinct_polyhedra = distinct.size();
    return rep;
}

std::vector<Vector> projective_points(const Field& f, std::size_t n)
{
    const std::uint32_t p = f.characteristic();
    std::vector<Vector> out;
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::size_t free = n - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < free; ++i)
            count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Vector v(n, f.zero());
            v[lead] = f.one();
            std::uint64_t c = code;
            for (std::size_t i = n; i-- > lead + 1;) {
                v[i] = f.from_int(static_cast<long long>(c % p));
                c /= p;
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Matrix> projective_matrices(const Field& f, std::size_t n)
{
    std::vector<Matrix> out;
    for (const auto& v : projective_points(f, n * n)) {
        Matrix m(f, n, n);
        for (std::size_t k = 0; k < n * n; ++k)
            m(k / n, k % n) = v[k];
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<MarkedMap> all_marked_maps(const Field& f, int N, int n)
{
    const std::size_t dim = static_cast<std::size_t>(N) + 1;
    auto pts = projective_points(f, dim);
    std::vector<MarkedMap> out;
    for (const auto& T : projective_matrices(f, dim)) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        for (;;) {
            std::vector<Vector> chosen;
            for (auto i : idx)
                chosen.push_back(pts[i]);
            out.emplace_back(ProjectiveMatrix(T), chosen);
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == pts.size())
                idx[k++] = 0;
            if (k == idx.size())
                break;
        }
    }
    return out;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> d(-range, range);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = f.from_int(d(rng));
    return m;
}

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> d(-range, range);
    Vector v;
    do {
        v.clear();
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(f.from_int(d(rng)));
    } while (is_zero(v));
    return v;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng, int range)
{
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng, range);
        if (rank(m) == n)
            return m;
    }
}

MarkedMap conjugate(const MarkedMap& mm, const Matrix& A)
{
    Matrix t = A * mm.T.matrix() * inverse(A);
    std::vector<Vector> pts;
    for (const auto& v : mm.points)
        pts.push_back(A * v);
    return MarkedMap(ProjectiveMatrix(t), pts);
}

std::string describe(const MarkedMap& mm)
{
    std::ostringstream os;
    const Matrix& t = mm.T.matrix();
    os << "T=[";
    for (std::size_t i = 0; i < t.rows(); ++i) {
        os << (i ? ";" : "");
        for (std::size_t j = 0; j < t.cols(); ++j)
            os << (j ? "," : "") << t(i, j).to_string();
    }
    os << "] points=";
    for (const auto& v : mm.points) {
        os << "[";
        for (std::size_t j = 0; j < v.size(); ++j)
            os << (j ? ":" : "") << v[j].to_string();
        os << "]";
    }
    return os.str();
}

OracleSweepReport compare_with_oracle(const std::vector<MarkedMap>& instances, const Sheaf& sheaf, Execution exec)
{
    OracleSweepReport rep;
    rep.instances = instances.size();
    std::vector<Status> thm(instances.size()), orc(instances.size());
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&](std::size_t k) {
        try {
            // Inner loops stay serial; parallelism is across instances.
            thm[k] = check_stability(instances[k], sheaf, Mode::Exact, 1000000, Execution::Serial).status;
            orc[k] = hilbert_mumford_oracle(instances[k], sheaf, OracleBases::AllBases, 2000000, Execution::Serial).status;
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err)
                err = std::current_exception();
        }
    };
    if (exec == Execution::Serial) {
        for (std::size_t k = 0; k < instances.size(); ++k)
            body(k);
    } else {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long k = 0; k < static_cast<long long>(instances.size()); ++k)
            body(static_cast<std::size_t>(k));
    }
    if (err)
        std::rethrow_exception(err);
    for (std::size_t k = 0; k < instances.size(); ++k) {
        ++rep.status_counts[to_string(thm[k])];
        if (thm[k] == orc[k])
            ++rep.agree;
        else if (rep.mismatches.size() < 10)
            rep.mismatches.push_back(describe(instances[k]) + " theorem=" + to_string(thm[k]) + " oracle="
                                     + to_string(orc[k]));
    }
    return rep;
}

}  // namespace gitstab
