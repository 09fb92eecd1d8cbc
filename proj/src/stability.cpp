#include "gitstab/stability.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>

namespace gitstab {

ProjectiveMatrix::ProjectiveMatrix(Matrix m) : m_(std::move(m))
{
    if (!m_.is_square() || m_.rows() < 2)
        throw std::invalid_argument("T must be a square matrix of size at least 2");
    if (m_.is_zero())
        throw std::invalid_argument("T is the zero matrix, which is not a point of P(Mat)");
    if (!m_.field().is_finite()) {
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j)
                if (!m_(i, j).is_zero()) {
                    m_ *= m_(i, j).inverse();
                    return;
                }
    }
}

bool ProjectiveMatrix::is_scalar() const
{
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j) {
            if (i != j && !m_(i, j).is_zero())
                return false;
            if (i == j && !(m_(i, i) == m_(0, 0)))
                return false;
        }
    return true;
}

bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b)
{
    const Matrix& x = a.m_;
    const Matrix& y = b.m_;
    if (!(x.field() == y.field()) || x.rows() != y.rows())
        return false;
    std::size_t k = 0;
    const std::size_t total = x.rows() * x.cols();
    while (k < total && x(k / x.cols(), k % x.cols()).is_zero())
        ++k;
    const FieldElement& x0 = x(k / x.cols(), k % x.cols());
    const FieldElement& y0 = y(k / y.cols(), k % y.cols());
    if (y0.is_zero())
        return false;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!(x(i, j) * y0 == y(i, j) * x0))
                return false;
    return true;
}

MarkedMap::MarkedMap(ProjectiveMatrix t, std::vector<Vector> pts) : T(std::move(t)), points(std::move(pts))
{
    const std::size_t n = T.matrix().rows();
    for (const auto& v : points) {
        if (v.size() != n)
            throw std::invalid_argument("marked point has wrong length");
        if (is_zero(v))
            throw std::invalid_argument("marked point is the zero vector");
        for (const auto& x : v)
            if (!(x.field() == T.field()))
                throw std::invalid_argument("marked point and map live over different fields");
    }
}

Sheaf::Sheaf(int q_, std::vector<int> m_) : q(q_), m(std::move(m_))
{
    if (q < 1)
        throw std::invalid_argument("sheaf exponent q must be at least 1");
    for (int x : m)
        if (x < 1)
            throw std::invalid_argument("point weights m_i must be at least 1");
}

long long Sheaf::total_weight() const
{
    long long s = 0;
    for (int x : m)
        s += x;
    return s;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::Stable:
        return "STABLE";
    case Status::StrictlySemistable:
        return "STRICTLY_SEMISTABLE";
    case Status::Unstable:
        return "UNSTABLE";
    case Status::UnstableCertified:
        return "UNSTABLE_CERTIFIED";
    case Status::NoViolationInFamily:
        return "NO_VIOLATION_IN_FAMILY";
    }
    return "?";
}

std::string to_string(Mode m)
{
    return m == Mode::Exact ? "EXACT" : "SEARCH";
}

RationalVector eta(const std::vector<Vector>& points, const std::vector<int>& m, int N)
{
    if (points.size() != m.size())
        throw std::invalid_argument("need one weight per point");
    Rational total = 0;
    for (int x : m)
        total += x;
    RationalVector out(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j)
        out[static_cast<std::size_t>(j - 1)] = -Rational(j) * total / (N + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        int last = 0;
        for (std::size_t k = 0; k < points[i].size(); ++k)
            if (!points[i][k].is_zero())
                last = static_cast<int>(k) + 1;
        for (int j = last; j <= N; ++j)
            out[static_cast<std::size_t>(j - 1)] += m[i];
    }
    return out;
}

Rational omega(const std::vector<Vector>& points, const std::vector<int>& m, const Flag& f)
{
    if (points.size() != m.size())
        throw std::invalid_argument("need one weight per point");
    Rational total = 0;
    for (int x : m)
        total += x;
    const Rational per_dim = total / static_cast<long>(f.ambient_dim());
    Rational om = 0;
    for (const auto& h : f.spaces()) {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (h.contains(points[i]))
                om += m[i];
        om -= per_dim * static_cast<long>(h.dim());
    }
    return om;
}

Rational flag_bound(FlagType t, int q)
{
    switch (t) {
    case FlagType::TypeI:
        return 0;
    case FlagType::TypeII:
        return q;
    case FlagType::TypeIII:
        return -q;
    case FlagType::None:
        break;
    }
    throw NotATestFlag("flag is of none of the three types");
}

Rational flag_bound(const Matrix& T, const Flag& f, int q)
{
    return flag_bound(classify_flag(T, f), q);
}

namespace {

struct FlagEval {
    FlagType type = FlagType::None;
    Rational omega;
    Rational bound;
};

template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn)
{
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);
}

void verify_witness(const MarkedMap& mm, const Sheaf& sheaf, const Witness& w)
{
    FlagType t = classify_flag(mm.T.matrix(), w.flag);
    Rational om = omega(mm.points, sheaf.m, w.flag);
    Rational b = flag_bound(t, sheaf.q);
    if (t != w.type || om != w.omega || b != w.bound)
        throw std::logic_error("witness failed independent recomputation");
}

}  // namespace

StabilityVerdict evaluate_flags(const MarkedMap& mm, const Sheaf& sheaf, const std::vector<Flag>& flags,
                                Execution exec)
{
    if (sheaf.m.size() != mm.points.size())
        throw std::invalid_argument("sheaf has " + std::to_string(sheaf.m.size()) + " weights for "
                                    + std::to_string(mm.points.size()) + " points");
    const Matrix& T = mm.T.matrix();
    std::vector<FlagEval> ev(flags.size());
    for_each_index(flags.size(), exec, [&](std::size_t i) {
        FlagType t = classify_flag(T, flags[i]);
        if (t == FlagType::None)
            return;
        ev[i] = {t, omega(mm.points, sheaf.m, flags[i]), flag_bound(t, sheaf.q)};
    });
    StabilityVerdict v;
    v.mode = Mode::Exact;
    v.flags_examined = flags.size();
    std::optional<std::size_t> violation, tight;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (ev[i].type == FlagType::None)
            continue;
        if (ev[i].omega > ev[i].bound) {
            violation = i;
            break;
        }
        if (!tight && ev[i].omega == ev[i].bound)
            tight = i;
    }
    auto pick = violation ? violation : tight;
    if (pick) {
        const auto& e = ev[*pick];
        v.witness = Witness{flags[*pick], e.type, e.omega, e.bound};
        verify_witness(mm, sheaf, *v.witness);
    }
    v.status = violation ? Status::Unstable : tight ? Status::StrictlySemistable : Status::Stable;
    return v;
}

namespace {

std::vector<Flag> span_family(const MarkedMap& mm)
{
    const Field f = mm.field();
    const std::size_t n = static_cast<std::size_t>(mm.N()) + 1;
    std::vector<Flag> out;
    const std::size_t np = mm.points.size();
    if (np > 20)
        throw std::invalid_argument("span family supports at most 20 points");
    for (std::uint32_t mask = 1; mask < (1u << np); ++mask) {
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < np; ++i)
            if (mask & (1u << i))
                gens.push_back(mm.points[i]);
        Subspace s = span(f, gens, n);
        if (s.dim() < n)
            out.emplace_back(std::vector<Subspace>{s});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// N = 1: a line with no marked point has Omega = -sum(m)/2, below every bound it can carry,
// so lines through points plus the kernel of a nilpotent T form a complete family.
std::vector<Flag> line_family(const MarkedMap& mm)
{
    const Field f = mm.field();
    const Matrix& T = mm.T.matrix();
    std::vector<Flag> out;
    for (const auto& v : mm.points)
        out.emplace_back(std::vector<Subspace>{span(f, {v}, 2)});
    if ((T * T).is_zero())
        out.emplace_back(std::vector<Subspace>{kernel(T)});
    std::erase_if(out, [&](const Flag& fl) { return classify_flag(T, fl) == FlagType::None; });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

StabilityVerdict check_stability(const MarkedMap& mm, const Sheaf& sheaf, Mode mode, std::uint64_t budget,
                                 Execution exec)
{
    if (sheaf.m.size() != mm.points.size())
        throw std::invalid_argument("sheaf has " + std::to_string(sheaf.m.size()) + " weights for "
                                    + std::to_string(mm.points.size()) + " points");
    if (mode == Mode::Search) {
        auto flags = candidate_flags(mm.T.matrix(), mm.points);
        StabilityVerdict v = evaluate_flags(mm, sheaf, flags, exec);
        v.mode = Mode::Search;
        v.method = "candidate-family";
        if (v.status == Status::Unstable) {
            v.status = Status::UnstableCertified;
        } else {
            v.status = Status::NoViolationInFamily;
            v.witness.reset();
        }
        return v;
    }
    if (mm.field().is_finite()) {
        auto flags = enumerate_flags(mm.field(), mm.N(), mm.N(), budget);
        StabilityVerdict v = evaluate_flags(mm, sheaf, flags, exec);
        v.method = "flag-enumeration";
        return v;
    }
    if (mm.T.is_scalar()) {
        StabilityVerdict v = evaluate_flags(mm, sheaf, span_family(mm), exec);
        v.method = "scalar-map-span-family";
        return v;
    }
    if (mm.N() == 1)
        return line_criterion(mm, sheaf, exec);
    if (mm.points.size() == 1)
        return one_point_criterion(mm, sheaf);
    throw ExactUnavailable(
        "exact mode over Q needs N = 1, a scalar map or a single marked point; use --mode search or a prime field");
}

StabilityVerdict line_criterion(const MarkedMap& mm, const Sheaf& sheaf, Execution exec)
{
    if (mm.N() != 1)
        throw std::invalid_argument("line criterion needs N = 1");
    StabilityVerdict v = evaluate_flags(mm, sheaf, line_family(mm), exec);
    v.method = "line-family";
    return v;
}

StabilityVerdict mumford_config(const std::vector<Vector>& points, const std::vector<int>& m, int N)
{
    if (points.size() != m.size())
        throw std::invalid_argument("need one weight per point");
    if (points.empty())
        throw std::invalid_argument("need at least one point");
    const Field f = points[0][0].field();
    const std::size_t n = static_cast<std::size_t>(N) + 1;
    Rational total = 0;
    for (int x : m)
        total += x;
    std::vector<Subspace> spans;
    for (std::uint32_t mask = 1; mask < (1u << points.size()); ++mask) {
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (mask & (1u << i))
                gens.push_back(points[i]);
        Subspace s = span(f, gens, n);
        if (s.dim() < n)
            spans.push_back(s);
    }
    std::sort(spans.begin(), spans.end());
    spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
    StabilityVerdict v;
    v.method = "point-configuration";
    v.flags_examined = spans.size();
    std::optional<Witness> tight;
    for (const auto& s : spans) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (s.contains(points[i]))
                lhs += m[i];
        Rational rhs = total * static_cast<long>(s.dim()) / static_cast<long>(n);
        Witness w{Flag({s}), FlagType::TypeI, lhs - rhs, 0};
        if (lhs > rhs) {
            v.status = Status::Unstable;
            v.witness = w;
            return v;
        }
        if (lhs == rhs && !tight)
            tight = w;
    }
    v.status = tight ? Status::StrictlySemistable : Status::Stable;
    v.witness = tight;
    return v;
}

namespace {

std::vector<Vector> krylov(const Matrix& T, const Vector& v, std::size_t count)
{
    std::vector<Vector> out{v};
    while (out.size() < count)
        out.push_back(T * out.back());
    return out;
}

}  // namespace

bool is_cyclic_non_nilpotent(const Matrix& T, const Vector& v)
{
    const std::size_t n = T.rows();
    auto k = krylov(T, v, n + 1);
    if (is_zero(k.back()))
        return false;
    k.pop_back();
    return rank(Matrix::from_columns(T.field(), n, k)) == n;
}

StabilityVerdict one_point_criterion(const MarkedMap& mm, const Sheaf& sheaf)
{
    if (mm.points.size() != 1 || sheaf.m.size() != 1)
        throw std::invalid_argument("one-point criterion needs exactly one marked point");
    const Matrix& T = mm.T.matrix();
    const Field f = T.field();
    const std::size_t n = T.rows();
    const Vector& v = mm.points[0];
    StabilityVerdict out;
    out.method = "one-point";

    Subspace cyc = invariant_span(T, {v});
    if (cyc.dim() < n) {
        // v lies in a proper invariant subspace; that single subspace is Type I or III and violated.
        Flag fl({cyc});
        FlagType t = classify_flag(T, fl);
        Witness w{fl, t, omega(mm.points, sheaf.m, fl), flag_bound(t, sheaf.q)};
        if (!(w.omega > w.bound))
            throw std::logic_error("one-point criterion: invariant span is not a violation");
        verify_witness(mm, sheaf, w);
        out.status = Status::Unstable;
        out.witness = w;
        out.flags_examined = 1;
        return out;
    }

    std::vector<Witness> tests;
    auto kv = krylov(T, v, n - 1);
    std::vector<Subspace> kry;
    for (std::size_t t = 1; t < n; ++t)
        kry.push_back(span(f, std::vector<Vector>(kv.begin(), kv.begin() + static_cast<long>(t)), n));
    Flag kf(kry);
    tests.push_back({kf, classify_flag(T, kf), omega(mm.points, sheaf.m, kf), 0});
    if (power(T, static_cast<unsigned>(n)).is_zero()) {
        std::vector<Subspace> kers;
        for (std::size_t t = 1; t < n; ++t)
            kers.push_back(kernel(power(T, static_cast<unsigned>(t))));
        Flag nf(kers);
        tests.push_back({nf, classify_flag(T, nf), omega(mm.points, sheaf.m, nf), 0});
    }
    std::optional<Witness> violation, tight;
    for (auto& w : tests) {
        w.bound = flag_bound(w.type, sheaf.q);
        if (w.omega > w.bound && !violation)
            violation = w;
        if (w.omega == w.bound && !tight)
            tight = w;
    }
    out.flags_examined = tests.size();
    out.status = violation ? Status::Unstable : tight ? Status::StrictlySemistable : Status::Stable;
    out.witness = violation ? violation : tight;
    if (out.witness)
        verify_witness(mm, sheaf, *out.witness);
    return out;
}

Integer oracle_basis_count(std::uint32_t p, int N, OracleBases bases)
{
    const int n = N + 1;
    Integer c = 1;
    if (bases == OracleBases::AllBases) {
        for (int i = 0; i < n; ++i)
            c *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n)) - boost::multiprecision::pow(Integer(p), static_cast<unsigned>(i));
        return c;
    }
    // [n]_p! complete flags.
    for (int k = 1; k <= n; ++k) {
        Integer s = 0;
        for (int i = 0; i < k; ++i)
            s += boost::multiprecision::pow(Integer(p), static_cast<unsigned>(i));
        c *= s;
    }
    return c;
}

namespace {

std::vector<Matrix> oracle_bases(const Field& f, std::size_t n, OracleBases mode)
{
    std::vector<Matrix> out;
    if (mode == OracleBases::AllBases) {
        const std::uint32_t p = f.characteristic();
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= p;
        std::vector<Vector> all;
        for (std::uint64_t code = 1; code < total; ++code) {
            Vector v(n, f.zero());
            std::uint64_t c = code;
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = f.from_int(static_cast<long long>(c % p));
                c /= p;
            }
            all.push_back(std::move(v));
        }
        std::vector<Vector> cur;
        std::function<void()> rec = [&] {
            if (cur.size() == n) {
                out.push_back(Matrix::from_columns(f, n, cur));
                return;
            }
            Subspace s = span(f, cur, n);
            for (const auto& v : all) {
                if (s.contains(v))
                    continue;
                cur.push_back(v);
                rec();
                cur.pop_back();
            }
        };
        rec();
        return out;
    }
    for (const auto& fl : enumerate_flags(f, static_cast<int>(n) - 1, static_cast<int>(n) - 1, 100000000)) {
        if (fl.length() != n - 1)
            continue;
        std::vector<Vector> cols;
        Subspace prev = Subspace::zero(f, n);
        auto add_outside = [&](const Subspace& h) {
            for (const auto& b : h.vectors())
                if (!prev.contains(b)) {
                    cols.push_back(b);
                    break;
                }
        };
        for (const auto& h : fl.spaces()) {
            add_outside(h);
            prev = h;
        }
        add_outside(Subspace::full(f, n));
        out.push_back(Matrix::from_columns(f, n, cols));
    }
    return out;
}

}  // namespace

StabilityVerdict hilbert_mumford_oracle(const MarkedMap& mm, const Sheaf& sheaf, OracleBases bases,
                                        std::uint64_t budget, Execution exec)
{
    if (!mm.field().is_finite())
        throw std::invalid_argument("the Hilbert-Mumford oracle needs a prime field");
    if (sheaf.m.size() != mm.points.size())
        throw std::invalid_argument("sheaf weight count differs from point count");
    Integer count = oracle_basis_count(mm.field().characteristic(), mm.N(), bases);
    if (count > budget)
        throw BudgetExceeded("oracle needs " + count.str() + " bases, budget is " + std::to_string(budget));
    const std::size_t n = static_cast<std::size_t>(mm.N()) + 1;
    auto bs = oracle_bases(mm.field(), n, bases);
    std::vector<char> semi(bs.size(), 0), stab(bs.size(), 0);
    for_each_index(bs.size(), exec, [&](std::size_t k) {
        Matrix binv = inverse(bs[k]);
        Matrix M = binv * mm.T.matrix() * bs[k];
        std::vector<Vector> coords;
        for (const auto& v : mm.points)
            coords.push_back(binv * v);
        RationalVector query = eta(coords, sheaf.m, mm.N());
        for (auto& x : query)
            x = -x / sheaf.q;
        std::vector<RationalVector> pts;
        for (const auto& w : raw_weights(Support::of(M)))
            pts.push_back(to_rational(w));
        semi[k] = corner_membership(pts, query, false);
        stab[k] = semi[k] && corner_membership(pts, query, true);
    });
    StabilityVerdict v;
    v.method = bases == OracleBases::AllBases ? "hilbert-mumford-all-bases" : "hilbert-mumford-flag-bases";
    v.flags_examined = bs.size();
    bool all_semi = std::all_of(semi.begin(), semi.end(), [](char c) { return c != 0; });
    bool all_stab = std::all_of(stab.begin(), stab.end(), [](char c) { return c != 0; });
    v.status = !all_semi ? Status::Unstable : all_stab ? Status::Stable : Status::StrictlySemistable;
    return v;
}

MarkedMap stable_witness(int N, int n, int q)
{
    if (N < 1 || n < 1)
        throw std::invalid_argument("stable_witness needs N >= 1 and n >= 1");
    if (q < n)
        throw std::invalid_argument("stable_witness needs q >= n");
    const Field f = Field::rationals();
    Matrix T(f, static_cast<std::size_t>(N) + 1, static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i)
        T(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = f.from_int(i + 1);
    Vector ones(static_cast<std::size_t>(N) + 1, f.one());
    return MarkedMap(ProjectiveMatrix(T), std::vector<Vector>(static_cast<std::size_t>(n), ones));
}

Vector normalize_projective(Vector v)
{
    for (const auto& x : v)
        if (!x.is_zero()) {
            FieldElement inv = x.inverse();
            for (auto& y : v)
                y *= inv;
            return v;
        }
    throw std::invalid_argument("cannot normalize the zero vector");
}

std::vector<FieldElement> companion_coefficients(const Matrix& T, const Vector& v)
{
    const std::size_t n = T.rows();
    if (!T.is_square() || v.size() != n)
        throw std::invalid_argument("companion form: dimension mismatch");
    auto k = krylov(T, v, n + 1);
    Vector last = k.back();
    k.pop_back();
    Matrix K = Matrix::from_columns(T.field(), n, k);
    if (rank(K) != n)
        throw NotCyclic("v is not a cyclic vector for T");
    if (is_zero(last))
        throw NotCyclic("T is nilpotent on v (T^{N+1} v = 0)");
    return inverse(K) * last;
}

std::vector<FieldElement> companion_form(const Matrix& T, const Vector& v)
{
    return normalize_projective(companion_coefficients(T, v));
}

namespace {

std::vector<Integer> divisors(Integer a)
{
    if (a < 0)
        a = -a;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a)
                large.push_back(a / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x)
{
    Rational r = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * x + c[i];
    return r;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs)
{
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    if (c.size() < 2)
        return {};
    std::vector<Rational> roots;
    std::size_t lo = 0;
    while (c[lo] == 0)
        ++lo;
    if (lo > 0)
        roots.push_back(0);
    std::vector<Rational> red(c.begin() + static_cast<long>(lo), c.end());
    if (red.size() >= 2) {
        Integer l = 1;
        for (const auto& x : red)
            l = boost::multiprecision::lcm(l, Integer(denominator(x)));
        Integer a0 = numerator(Rational(red.front() * l));
        Integer ad = numerator(Rational(red.back() * l));
        for (const auto& p : divisors(a0))
            for (const auto& q : divisors(ad))
                for (int sgn : {1, -1}) {
                    Rational x(Integer(sgn * p), q);
                    if (eval_poly(red, x) == 0)
                        roots.push_back(x);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

ModuliCoordinates moduli_coordinates(const MarkedMap& mm)
{
    const Matrix& T = mm.T.matrix();
    const Field f = T.field();
    const std::size_t n = T.rows();
    if (mm.points.empty())
        throw std::invalid_argument("moduli coordinates need at least one point");
    auto cp = characteristic_polynomial(T);
    std::vector<FieldElement> eig;
    if (f.is_finite()) {
        for (std::uint32_t r = 0; r < f.characteristic(); ++r) {
            FieldElement x = f.from_int(r), acc = f.zero();
            for (std::size_t i = cp.size(); i-- > 0;)
                acc = acc * x + cp[i];
            if (acc.is_zero())
                eig.push_back(x);
        }
    } else {
        std::vector<Rational> rc;
        for (const auto& x : cp)
            rc.push_back(x.rational());
        for (const auto& r : rational_roots(rc))
            eig.push_back(f.from_rational(r));
    }
    if (eig.size() != n)
        throw NotGeneric("T does not have N+1 distinct eigenvalues in the working field");
    std::vector<Vector> evec;
    for (const auto& lam : eig) {
        Matrix s = T;
        for (std::size_t i = 0; i < n; ++i)
            s(i, i) -= lam;
        Subspace k = kernel(s);
        evec.push_back(k.vectors().at(0));
    }

    std::optional<ModuliCoordinates> best;
    for (const auto& pivot : eig) {
        if (pivot.is_zero())
            continue;
        FieldElement c = pivot.inverse();
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return eig[a] * c < eig[b] * c; });
        std::vector<Vector> cols;
        ModuliCoordinates mc;
        for (auto i : order) {
            cols.push_back(evec[i]);
            mc.eigenvalues.push_back(eig[i] * c);
        }
        Matrix pinv = inverse(Matrix::from_columns(f, n, cols));
        Vector c1 = pinv * mm.points[0];
        for (const auto& x : c1)
            if (x.is_zero())
                throw NotGeneric("first marked point lies on an eigen-hyperplane");
        for (std::size_t j = 1; j < mm.points.size(); ++j) {
            Vector w = pinv * mm.points[j];
            for (std::size_t i = 0; i < n; ++i)
                w[i] /= c1[i];
            mc.points.push_back(normalize_projective(w));
        }
        auto key = [](const ModuliCoordinates& m) {
            std::vector<FieldElement> k = m.eigenvalues;
            for (const auto& p : m.points)
                k.insert(k.end(), p.begin(), p.end());
            return k;
        };
        if (!best || key(mc) < key(*best))
            best = mc;
    }
    return *best;
}

}  // namespace gitstab
