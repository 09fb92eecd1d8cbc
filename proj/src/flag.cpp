#include "gitstab/flag.hpp"

#include <algorithm>
#include <functional>

namespace gitstab {

Flag::Flag(std::vector<Subspace> spaces) : spaces_(std::move(spaces))
{
    if (spaces_.empty())
        throw std::invalid_argument("a flag needs at least one subspace");
    const std::size_t n = spaces_.front().ambient_dim();
    for (std::size_t t = 0; t < spaces_.size(); ++t) {
        const auto& h = spaces_[t];
        if (h.ambient_dim() != n)
            throw std::invalid_argument("flag subspaces live in different ambient spaces");
        if (h.dim() == 0 || h.dim() == n)
            throw std::invalid_argument("flag subspaces must be nonzero and proper");
        if (t > 0 && (h.dim() <= spaces_[t - 1].dim() || !subspace_leq(spaces_[t - 1], h)))
            throw std::invalid_argument("flag subspaces must be strictly nested");
    }
}

bool operator<(const Flag& a, const Flag& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    return std::lexicographical_compare(a.spaces_.begin(), a.spaces_.end(), b.spaces_.begin(), b.spaces_.end());
}

std::string to_string(FlagType t)
{
    switch (t) {
    case FlagType::TypeI:
        return "TYPE_I";
    case FlagType::TypeII:
        return "TYPE_II";
    case FlagType::TypeIII:
        return "TYPE_III";
    case FlagType::None:
        return "NONE";
    }
    return "?";
}

HessenbergFunction hessenberg(const Matrix& T, const Flag& f)
{
    const std::size_t n = f.ambient_dim();
    if (T.rows() != n || T.cols() != n)
        throw std::invalid_argument("map and flag dimensions differ");
    const std::size_t g = f.length();
    HessenbergFunction h;
    h.values.assign(g + 2, 0);
    auto space = [&](std::size_t j) -> Subspace {
        if (j == 0)
            return Subspace::zero(T.field(), n);
        if (j == g + 1)
            return Subspace::full(T.field(), n);
        return f[j - 1];
    };
    for (std::size_t i = 1; i <= g + 1; ++i) {
        Subspace img = subspace_image(T, space(i));
        std::size_t j = 0;
        while (!subspace_leq(img, space(j)))
            ++j;
        h.values[i] = static_cast<int>(j);
    }
    return h;
}

bool is_type_I(const Matrix& T, const Flag& f)
{
    if (f.length() != 1)
        return false;
    Subspace img = subspace_image(T, f[0]);
    if (!subspace_leq(img, f[0]))
        return false;
    if (img.dim() != 0)
        return true;
    Subspace range = subspace_image(T, Subspace::full(T.field(), f.ambient_dim()));
    return !subspace_leq(range, f[0]);
}

bool is_type_II(const Matrix& T, const Flag& f)
{
    auto h = hessenberg(T, f).values;
    for (std::size_t t = 1; t <= f.length(); ++t)
        if (h[t] != static_cast<int>(t) + 1)
            return false;
    return true;
}

bool is_type_III(const Matrix& T, const Flag& f)
{
    auto h = hessenberg(T, f).values;
    for (std::size_t t = 1; t <= f.length() + 1; ++t)
        if (h[t] != static_cast<int>(t) - 1)
            return false;
    return true;
}

FlagType classify_flag(const Matrix& T, const Flag& f)
{
    bool a = is_type_I(T, f);
    bool b = is_type_II(T, f);
    bool c = is_type_III(T, f);
    if (a + b + c > 1)
        throw std::logic_error("flag satisfies more than one type predicate");
    if (a)
        return FlagType::TypeI;
    if (b)
        return FlagType::TypeII;
    if (c)
        return FlagType::TypeIII;
    return FlagType::None;
}

namespace {

Integer gaussian_binomial(std::uint32_t p, int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

}  // namespace

Integer flag_count(std::uint32_t p, int N, int max_gamma)
{
    const int n = N + 1;
    Integer total = 0;
    for (unsigned mask = 1; mask < (1u << N); ++mask) {
        std::vector<int> dims;
        for (int d = 1; d <= N; ++d)
            if (mask & (1u << (d - 1)))
                dims.push_back(d);
        if (static_cast<int>(dims.size()) > max_gamma)
            continue;
        Integer c = gaussian_binomial(p, n, dims.back());
        for (std::size_t t = dims.size() - 1; t > 0; --t)
            c *= gaussian_binomial(p, dims[t], dims[t - 1]);
        total += c;
    }
    return total;
}

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t n, std::size_t dim)
{
    if (!f.is_finite())
        throw std::invalid_argument("subspace enumeration needs a finite field");
    const std::uint32_t p = f.characteristic();
    std::vector<Subspace> out;
    std::vector<std::size_t> piv(dim);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t r, std::size_t from) {
        if (r == dim) {
            // Free slots: (row, col) with col > pivot of row and col not a pivot.
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t c = piv[i] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end())
                        slots.emplace_back(i, c);
            std::vector<std::uint32_t> digit(slots.size(), 0);
            for (;;) {
                std::vector<Vector> rows(dim, Vector(n, f.zero()));
                for (std::size_t i = 0; i < dim; ++i)
                    rows[i][piv[i]] = f.one();
                for (std::size_t s = 0; s < slots.size(); ++s)
                    rows[slots[s].first][slots[s].second] = f.from_int(digit[s]);
                out.push_back(span(f, rows, n));
                std::size_t s = 0;
                while (s < digit.size() && ++digit[s] == p)
                    digit[s++] = 0;
                if (s == digit.size())
                    break;
            }
            return;
        }
        for (std::size_t c = from; c < n; ++c) {
            piv[r] = c;
            choose(r + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag> enumerate_flags(const Field& f, int N, int max_gamma, std::uint64_t budget)
{
    if (!f.is_finite())
        throw std::invalid_argument("flag enumeration needs a finite field");
    max_gamma = std::min(max_gamma, N);
    Integer count = flag_count(f.characteristic(), N, max_gamma);
    if (count > budget)
        throw BudgetExceeded("flag enumeration needs " + count.str() + " flags, budget is " + std::to_string(budget));
    const std::size_t n = static_cast<std::size_t>(N) + 1;
    std::vector<Subspace> subs;
    for (std::size_t d = 1; d < n; ++d) {
        auto s = enumerate_subspaces(f, n, d);
        subs.insert(subs.end(), s.begin(), s.end());
    }
    std::vector<std::vector<std::size_t>> above(subs.size());
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b)
            if (subs[b].dim() > subs[a].dim() && subspace_leq(subs[a], subs[b]))
                above[a].push_back(b);
    std::vector<Flag> out;
    out.reserve(count.convert_to<std::size_t>());
    std::vector<std::size_t> chain;
    std::function<void(int)> extend = [&](int gamma) {
        if (static_cast<int>(chain.size()) == gamma) {
            std::vector<Subspace> sp;
            for (auto i : chain)
                sp.push_back(subs[i]);
            out.emplace_back(std::move(sp));
            return;
        }
        const auto& next = chain.empty() ? std::vector<std::size_t>() : above[chain.back()];
        if (chain.empty()) {
            for (std::size_t i = 0; i < subs.size(); ++i) {
                chain.push_back(i);
                extend(gamma);
                chain.pop_back();
            }
            return;
        }
        for (auto i : next) {
            chain.push_back(i);
            extend(gamma);
            chain.pop_back();
        }
    };
    for (int gamma = 1; gamma <= max_gamma; ++gamma)
        extend(gamma);
    return out;
}

std::vector<Flag> candidate_flags(const Matrix& T, const std::vector<Vector>& points)
{
    const Field f = T.field();
    const std::size_t n = T.rows();
    const std::size_t np = points.size();
    if (np > 16)
        throw std::invalid_argument("candidate search supports at most 16 points");
    std::vector<Flag> cands;
    auto proper = [&](const Subspace& s) { return s.dim() > 0 && s.dim() < n; };

    for (std::uint32_t mask = 1; mask < (1u << np); ++mask) {
        std::vector<Vector> seeds;
        for (std::size_t i = 0; i < np; ++i)
            if (mask & (1u << i))
                seeds.push_back(points[i]);
        Subspace x = invariant_span(T, seeds);
        if (proper(x))
            cands.emplace_back(std::vector<Subspace>{x});
    }

    // Greedy chains: each point enters at a level in 1..gamma or never.
    for (std::size_t gamma = 1; gamma < n; ++gamma) {
        std::vector<std::size_t> level(np, 0);
        for (;;) {
            std::vector<Subspace> chain;
            Subspace prev = Subspace::zero(f, n);
            bool ok = true;
            for (std::size_t t = 1; t <= gamma && ok; ++t) {
                std::vector<Vector> gens = subspace_image(T, prev).vectors();
                for (std::size_t i = 0; i < np; ++i)
                    if (level[i] >= 1 && level[i] <= t)
                        gens.push_back(points[i]);
                Subspace h = subspace_sum(prev, span(f, gens, n));
                ok = proper(h) && h.dim() > prev.dim();
                chain.push_back(h);
                prev = h;
            }
            if (ok)
                cands.emplace_back(std::move(chain));
            std::size_t i = 0;
            while (i < np && ++level[i] == gamma + 1)
                level[i++] = 0;
            if (i == np)
                break;
        }
    }

    // Kernel filtration ker T^t and image filtration im T^t, with all sub-chains.
    std::vector<Subspace> kers, ims;
    Matrix pw = T;
    for (std::size_t t = 1; t <= n; ++t) {
        Subspace k = kernel(pw);
        if (proper(k) && (kers.empty() || !(kers.back() == k)))
            kers.push_back(k);
        Subspace im = span(f, [&] {
            std::vector<Vector> cols;
            for (std::size_t j = 0; j < n; ++j)
                cols.push_back(pw.column(j));
            return cols;
        }(), n);
        if (proper(im) && (ims.empty() || !(ims.front() == im)))
            ims.insert(ims.begin(), im);
        pw = pw * T;
    }
    for (const auto* filt : {&kers, &ims}) {
        const std::size_t L = filt->size();
        for (std::uint32_t mask = 1; mask < (1u << L); ++mask) {
            std::vector<Subspace> chain;
            for (std::size_t i = 0; i < L; ++i)
                if (mask & (1u << i))
                    chain.push_back((*filt)[i]);
            cands.emplace_back(std::move(chain));
        }
    }

    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Flag> out;
    for (auto& c : cands)
        if (classify_flag(T, c) != FlagType::None)
            out.push_back(std::move(c));
    return out;
}

}  // namespace gitstab
