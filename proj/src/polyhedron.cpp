#include "gitstab/polyhedron.hpp"

#include "gitstab/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gitstab {

std::string to_string(FacetKind k)
{
    switch (k) {
    case FacetKind::F1A:
        return "F-1A";
    case FacetKind::F1B:
        return "F-1B";
    case FacetKind::F2A:
        return "F-2A";
    case FacetKind::F2B:
        return "F-2B";
    }
    return "?";
}

Rational s_I(const std::vector<int>& I, const RationalVector& x)
{
    Rational s = 0;
    for (int i : I)
        s += x[static_cast<std::size_t>(i - 1)];
    return s;
}

RationalVector to_rational(const WeightVector& w)
{
    return RationalVector(w.begin(), w.end());
}

CornerPolyhedron::CornerPolyhedron(int N, std::vector<RationalVector> vertices, std::vector<Facet> facets)
    : N_(N), vertices_(std::move(vertices)), facets_(std::move(facets))
{
    if (vertices_.empty())
        throw std::invalid_argument("corner polyhedron needs a vertex");
    for (const auto& v : vertices_)
        if (static_cast<int>(v.size()) != N_)
            throw std::invalid_argument("vertex has wrong dimension");
    for (const auto& f : facets_) {
        if (f.I.empty() || !std::is_sorted(f.I.begin(), f.I.end()) || f.I.front() < 1 || f.I.back() > N_)
            throw std::invalid_argument("facet index set out of range");
        bool tight = false;
        for (const auto& v : vertices_) {
            Rational val = s_I(f.I, v);
            if (val < f.c)
                throw std::logic_error("vertex violates facet");
            tight = tight || val == f.c;
        }
        if (!tight)
            throw std::logic_error("facet is not tight at any vertex");
    }
}

bool CornerPolyhedron::satisfies(const RationalVector& x, bool strict) const
{
    for (const auto& f : facets_) {
        Rational v = s_I(f.I, x);
        if (strict ? v <= f.c : v < f.c)
            return false;
    }
    return true;
}

std::vector<WeightVector> raw_weights(const Support& s)
{
    std::vector<WeightVector> out;
    for (auto e : s.entries())
        out.push_back(entry_weight(e.row, e.col, s.N()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<int>> index_subsets(int N)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < N; ++i)
            if (mask & (1u << i))
                I.push_back(i + 1);
        out.push_back(std::move(I));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

// h_{M,I}(t) for t = 1..gamma+1, positions i_0 = 0, i_{gamma+1} = N+1.
std::vector<int> subflag_hessenberg(const Support& s, const std::vector<int>& I)
{
    std::vector<int> pos{0};
    pos.insert(pos.end(), I.begin(), I.end());
    pos.push_back(s.N() + 1);
    std::vector<int> h(pos.size(), 0);
    for (std::size_t t = 1; t < pos.size(); ++t) {
        int top = s.top(pos[t]);
        std::size_t tp = 0;
        while (pos[tp] < top)
            ++tp;
        h[t] = static_cast<int>(tp);
    }
    return h;
}

std::vector<RationalVector> control_vertices(const Support& s)
{
    std::vector<RationalVector> v;
    for (const auto& col : control_matrix(s).columns)
        v.push_back(to_rational(col));
    return v;
}

}  // namespace

CornerPolyhedron corner_facets(const Support& s)
{
    if (s.empty())
        throw TrivialProfile();
    const int N = s.N();
    const bool strict = s.strictly_upper_triangular();
    std::vector<Facet> facets;
    for (const auto& I : index_subsets(N)) {
        const int gamma = static_cast<int>(I.size());
        auto h = subflag_hessenberg(s, I);
        if (!strict) {
            if (gamma == 1 && s.top(I[0]) <= I[0]) {
                facets.push_back({I, 0, FacetKind::F1A});
                continue;
            }
            bool ok = true;
            for (int t = 1; t <= gamma; ++t)
                ok = ok && h[static_cast<std::size_t>(t)] == t + 1;
            if (ok)
                facets.push_back({I, -1, FacetKind::F1B});
        } else {
            if (gamma == 1 && (s.top(N + 1) > I[0] || s.top(I[0]) > 0)) {
                facets.push_back({I, 0, FacetKind::F2A});
                continue;
            }
            bool ok = true;
            for (int t = 1; t <= gamma + 1; ++t)
                ok = ok && h[static_cast<std::size_t>(t)] == t - 1;
            if (ok)
                facets.push_back({I, 1, FacetKind::F2B});
        }
    }
    return CornerPolyhedron(N, control_vertices(s), std::move(facets));
}

ControlMatrix verts_projection(const Support& s, const std::vector<int>& I)
{
    if (I.empty())
        throw std::invalid_argument("projection needs a nonempty index set");
    ControlMatrix full = control_matrix(s);
    std::vector<WeightVector> cols;
    for (const auto& c : full.columns) {
        WeightVector r;
        for (int i : I)
            r.push_back(c[static_cast<std::size_t>(i - 1)]);
        cols.push_back(std::move(r));
    }
    // Remove dominated columns; among equal columns keep the first.
    std::vector<WeightVector> kept;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        bool removed = false;
        for (std::size_t b = 0; b < cols.size() && !removed; ++b) {
            if (a == b || !dominates(cols[b], cols[a]))
                continue;
            removed = cols[a] != cols[b] || b < a;
        }
        if (!removed)
            kept.push_back(cols[a]);
    }
    return {static_cast<int>(I.size()), kept};
}

std::vector<Facet> facets_from_control(const Support& s)
{
    const int N = s.N();
    const bool strict = s.strictly_upper_triangular();
    ControlMatrix ctrl = control_matrix(s);
    std::vector<Facet> out;
    for (const auto& I : index_subsets(N)) {
        const int gamma = static_cast<int>(I.size());
        if (!strict && gamma == 1) {
            bool zero_row = std::all_of(ctrl.columns.begin(), ctrl.columns.end(),
                                        [&](const WeightVector& c) { return c[static_cast<std::size_t>(I[0] - 1)] == 0; });
            if (zero_row) {
                out.push_back({I, 0, FacetKind::F1A});
                continue;
            }
        }
        ControlMatrix p = verts_projection(s, I);
        if (strict && gamma == 1 && p.columns.size() == 1 && p.columns[0][0] == 0) {
            out.push_back({I, 0, FacetKind::F2A});
            continue;
        }
        if (static_cast<int>(p.columns.size()) != gamma)
            continue;
        const int sign = strict ? 1 : -1;
        bool is_identity = true;
        for (int a = 0; a < gamma; ++a)
            for (int b = 0; b < gamma; ++b)
                is_identity = is_identity
                    && p.columns[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == (a == b ? sign : 0);
        if (is_identity)
            out.push_back({I, sign, strict ? FacetKind::F2B : FacetKind::F1B});
    }
    return out;
}

bool corner_membership(const std::vector<RationalVector>& points, const RationalVector& query, bool strict)
{
    if (points.empty())
        throw std::invalid_argument("corner membership needs at least one point");
    const std::size_t N = query.size();
    for (const auto& p : points) {
        if (p.size() != N)
            throw std::invalid_argument("point dimension mismatch");
        bool below = true;
        for (std::size_t i = 0; i < N && below; ++i)
            below = strict ? p[i] < query[i] : p[i] <= query[i];
        if (below)
            return true;
    }
    // Variables: lambda_1..lambda_k, eps, slack_1..slack_N.
    //   sum_w lambda_w w_i + eps + slack_i = query_i,  sum lambda = 1,  maximize eps.
    // Feasible <=> query in the corner; optimum > 0 <=> query in Conv + interior(O+).
    const std::size_t k = points.size();
    const std::size_t nv = k + 1 + N;
    std::vector<std::vector<Rational>> A(N + 1, std::vector<Rational>(nv));
    std::vector<Rational> b(N + 1);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t w = 0; w < k; ++w)
            A[i][w] = points[w][i];
        A[i][k] = 1;
        A[i][k + 1 + i] = 1;
        b[i] = query[i];
    }
    for (std::size_t w = 0; w < k; ++w)
        A[N][w] = 1;
    b[N] = 1;
    std::vector<Rational> c(nv);
    c[k] = 1;
    LpResult r = solve_lp(A, b, c);
    if (r.status == LpStatus::Infeasible)
        return false;
    if (r.status == LpStatus::Unbounded)
        throw std::logic_error("membership LP unbounded");
    return strict ? r.value > 0 : true;
}

bool corner_membership(const std::vector<WeightVector>& points, const WeightVector& query, bool strict)
{
    std::vector<RationalVector> pts;
    for (const auto& p : points)
        pts.push_back(to_rational(p));
    return corner_membership(pts, to_rational(query), strict);
}

CornerPolyhedron minkowski_translate(const CornerPolyhedron& p, const RationalVector& shift, int q)
{
    if (q < 1)
        throw std::invalid_argument("scale must be a positive integer");
    if (static_cast<int>(shift.size()) != p.dim())
        throw std::invalid_argument("shift has wrong dimension");
    std::vector<RationalVector> verts;
    for (const auto& v : p.vertices()) {
        RationalVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            w[i] = q * v[i] + shift[i];
        verts.push_back(std::move(w));
    }
    std::vector<Facet> facets;
    for (const auto& f : p.facets())
        facets.push_back({f.I, q * f.c + s_I(f.I, shift), f.kind});
    return CornerPolyhedron(p.dim(), std::move(verts), std::move(facets));
}

}  // namespace gitstab
