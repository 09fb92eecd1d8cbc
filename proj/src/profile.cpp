#include "gitstab/profile.hpp"

#include <algorithm>

namespace gitstab {

Support Support::of(const Matrix& m)
{
    if (!m.is_square() || m.rows() < 2)
        throw std::invalid_argument("expected a square matrix of size at least 2");
    Support s(static_cast<int>(m.rows()) - 1);
    for (int i = 1; i <= s.size(); ++i)
        for (int j = 1; j <= s.size(); ++j)
            s.set(i, j, !m(i - 1, j - 1).is_zero());
    return s;
}

Support Support::from_mask(int N, std::uint64_t mask)
{
    Support s(N);
    for (int i = 1; i <= N + 1; ++i)
        for (int j = 1; j <= N + 1; ++j)
            s.set(i, j, (mask >> ((i - 1) * (N + 1) + (j - 1))) & 1u);
    return s;
}

Support Support::from_entries(int N, const std::vector<Entry>& entries)
{
    Support s(N);
    for (auto e : entries)
        s.set(e.row, e.col);
    return s;
}

std::vector<Entry> Support::entries() const
{
    std::vector<Entry> out;
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j <= size(); ++j)
            if ((*this)(i, j))
                out.push_back({i, j});
    return out;
}

bool Support::empty() const
{
    return std::none_of(bits_.begin(), bits_.end(), [](auto b) { return b != 0; });
}

bool Support::upper_triangular() const
{
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j < i; ++j)
            if ((*this)(i, j))
                return false;
    return true;
}

bool Support::strictly_upper_triangular() const
{
    if (!upper_triangular())
        return false;
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i, i))
            return false;
    return true;
}

int Support::top(int i) const
{
    int t = 0;
    for (int j = 1; j <= i; ++j)
        for (int r = size(); r > t; --r)
            if ((*this)(r, j)) {
                t = r;
                break;
            }
    return t;
}

Profile::Profile(std::string word) : word_(std::move(word))
{
    if (word_.size() < 4 || word_.size() % 2)
        throw std::invalid_argument("profile word must have even length >= 4");
    int d = 0, r = 0;
    bool lower = word_[0] == 'D';
    for (char ch : word_) {
        if (ch == 'D')
            ++d;
        else if (ch == 'R')
            ++r;
        else
            throw std::invalid_argument("profile word letters must be D or R");
        if (lower ? r > d : d > r)
            throw std::invalid_argument("profile word crosses the diagonal: " + word_);
    }
    if (d != r)
        throw std::invalid_argument("profile word must have equally many D and R");
    if (word_ == std::string(static_cast<std::size_t>(r), 'R') + std::string(static_cast<std::size_t>(d), 'D'))
        throw std::invalid_argument("profile word encloses no entry: " + word_);
}

std::vector<int> Profile::down_columns() const
{
    std::vector<int> c;
    int rights = 0;
    for (char ch : word_) {
        if (ch == 'R')
            ++rights;
        else
            c.push_back(rights);
    }
    return c;
}

bool Profile::contains(Entry e) const
{
    return e.col > down_columns()[static_cast<std::size_t>(e.row - 1)];
}

std::string to_string(Orientation o)
{
    return o == Orientation::Lower ? "lower" : "upper";
}

Profile profile(const Support& s)
{
    if (s.empty())
        throw TrivialProfile();
    const int n = s.size();
    const bool lower = !s.strictly_upper_triangular();
    // c_i: column of the path while it descends through row i. Largest admissible
    // value = fewest entries contained.
    std::vector<int> c(static_cast<std::size_t>(n));
    int bound = n;
    for (int i = n; i >= 1; --i) {
        for (int j = 1; j <= n; ++j)
            if (s(i, j)) {
                bound = std::min(bound, j - 1);
                break;
            }
        c[static_cast<std::size_t>(i - 1)] = lower ? std::min(bound, i - 1) : bound;
    }
    std::string w;
    int col = 0;
    for (int i = 1; i <= n; ++i) {
        w.append(static_cast<std::size_t>(c[static_cast<std::size_t>(i - 1)] - col), 'R');
        col = c[static_cast<std::size_t>(i - 1)];
        w.push_back('D');
    }
    w.append(static_cast<std::size_t>(n - col), 'R');
    return Profile(std::move(w));
}

std::vector<Entry> pivotal_entries(const Profile& p)
{
    std::vector<Entry> out;
    const auto& w = p.word();
    int row = 0, col = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 'R') {
            ++col;
            continue;
        }
        ++row;
        if (k + 1 < w.size() && w[k + 1] == 'R')
            out.push_back({row, col + 1});
    }
    return out;
}

WeightVector entry_weight(int i, int j, int N)
{
    if (i < 1 || j < 1 || i > N + 1 || j > N + 1)
        throw std::invalid_argument("entry index out of range");
    WeightVector w(static_cast<std::size_t>(N), 0);
    if (i > j)
        for (int t = j; t <= i - 1; ++t)
            w[static_cast<std::size_t>(t - 1)] = -1;
    else if (i < j)
        for (int t = i; t <= j - 1; ++t)
            w[static_cast<std::size_t>(t - 1)] = 1;
    return w;
}

bool dominates(const WeightVector& a, const WeightVector& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] < a[k])
            return false;
    return true;
}

bool outweighs(Entry a, Entry b, int N)
{
    if (a.row < 1 || a.col < 1 || b.row < 1 || b.col < 1 || a.row > N + 1 || a.col > N + 1 || b.row > N + 1
        || b.col > N + 1)
        throw std::invalid_argument("entry index out of range");
    auto below = [](Entry e) { return e.row > e.col; };
    auto above = [](Entry e) { return e.row < e.col; };
    if (below(a) && below(b))
        return a != b && a.row >= b.row && a.col <= b.col;
    if (below(a))
        return true;
    if (above(a) && above(b))
        return a != b && a.row >= b.row && a.col <= b.col;
    if (above(a))
        return false;
    // a on the diagonal: weight 0.
    return above(b);
}

std::vector<Entry> minimal_entries(const Support& s)
{
    if (s.empty())
        throw TrivialProfile();
    auto all = s.entries();
    std::vector<Entry> out;
    for (auto b : all) {
        bool minimal = std::none_of(all.begin(), all.end(), [&](Entry a) { return outweighs(a, b, s.N()); });
        if (minimal)
            out.push_back(b);
    }
    return out;
}

ControlMatrix control_matrix(const Support& s)
{
    if (s.empty())
        throw TrivialProfile();
    ControlMatrix cm;
    cm.n_rows = s.N();
    if (s.upper_triangular() && !s.strictly_upper_triangular()) {
        cm.columns.push_back(WeightVector(static_cast<std::size_t>(s.N()), 0));
        return cm;
    }
    for (auto e : pivotal_entries(profile(s)))
        if (e.row != e.col)
            cm.columns.push_back(entry_weight(e.row, e.col, s.N()));
    return cm;
}

namespace {

void dyck_words(std::string& cur, int d, int r, int n, bool lower, std::vector<std::string>& out)
{
    if (d == n && r == n) {
        out.push_back(cur);
        return;
    }
    // D before R keeps the output lexicographic.
    if (d < n && (lower || d < r)) {
        cur.push_back('D');
        dyck_words(cur, d + 1, r, n, lower, out);
        cur.pop_back();
    }
    if (r < n && (!lower || r < d)) {
        cur.push_back('R');
        dyck_words(cur, d, r + 1, n, lower, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Profile> enumerate_profiles(int N)
{
    if (N < 1)
        throw std::invalid_argument("N must be at least 1");
    const int n = N + 1;
    std::vector<std::string> words;
    std::string cur = "D";
    dyck_words(cur, 1, 0, n, true, words);
    std::vector<std::string> upper;
    cur = "R";
    dyck_words(cur, 0, 1, n, false, upper);
    // R^{N+1} D^{N+1} contains no entry: the zero matrix.
    const std::string trivial = std::string(static_cast<std::size_t>(n), 'R') + std::string(static_cast<std::size_t>(n), 'D');
    for (auto& w : upper)
        if (w != trivial)
            words.push_back(w);
    std::vector<Profile> out;
    out.reserve(words.size());
    for (auto& w : words)
        out.emplace_back(w);
    return out;
}

}  // namespace gitstab
