#include "gitstab/linalg.hpp"

#include <stdexcept>

namespace gitstab {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero())
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = f.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("vector length does not match ambient dimension");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols)
{
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("vector length does not match ambient dimension");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += x * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size())
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vector out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!v[k].is_zero())
                out[i] += a(i, k) * v[k];
    return out;
}

Matrix& Matrix::operator*=(const FieldElement& c)
{
    for (auto& x : a_)
        x *= c;
    return *this;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix rref(Matrix m, std::size_t* rank_out)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(piv, j));
        FieldElement inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            FieldElement f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (rank_out)
        *rank_out = r;
    return m;
}

std::size_t rank(const Matrix& m)
{
    std::size_t r = 0;
    rref(m, &r);
    return r;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    std::size_t r = 0;
    aug = rref(aug, &r);
    for (std::size_t i = 0; i < n; ++i)
        if (!aug(i, i).is_one())
            throw std::domain_error("singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

Matrix power(const Matrix& m, unsigned k)
{
    Matrix r = Matrix::identity(m.field(), m.rows());
    for (unsigned i = 0; i < k; ++i)
        r = r * m;
    return r;
}

std::vector<FieldElement> characteristic_polynomial(const Matrix& m)
{
    // Similarity to upper Hessenberg form, then the usual leading-block recurrence.
    // Division-safe over every field, unlike Faddeev-LeVerrier.
    if (!m.is_square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    const Field f = m.field();
    Matrix h = m;
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && h(piv, c).is_zero())
            ++piv;
        if (piv == n)
            continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(piv, j), h(c + 1, j));
            for (std::size_t i = 0; i < n; ++i)
                std::swap(h(i, piv), h(i, c + 1));
        }
        FieldElement inv = h(c + 1, c).inverse();
        for (std::size_t i = c + 2; i < n; ++i) {
            if (h(i, c).is_zero())
                continue;
            FieldElement u = h(i, c) * inv;
            for (std::size_t j = 0; j < n; ++j)
                h(i, j) -= u * h(c + 1, j);
            for (std::size_t k = 0; k < n; ++k)
                h(k, c + 1) += u * h(k, i);
        }
    }
    // p_k = char poly of the leading k x k block, by the standard Hessenberg recurrence.
    std::vector<std::vector<FieldElement>> p(n + 1);
    p[0] = {f.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<FieldElement> pk(k + 1, f.zero());
        // (x - h_kk) p_{k-1}
        for (std::size_t d = 0; d < k; ++d) {
            pk[d + 1] += p[k - 1][d];
            pk[d] -= h(k - 1, k - 1) * p[k - 1][d];
        }
        FieldElement prod = f.one();
        for (std::size_t i = k - 1; i-- > 0;) {
            prod *= h(i + 1, i);
            FieldElement coef = prod * h(i, k - 1);
            for (std::size_t d = 0; d < p[i].size(); ++d)
                pk[d] -= coef * p[i][d];
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

Subspace Subspace::zero(Field f, std::size_t n)
{
    return Subspace(Matrix(f, 0, n));
}

Subspace Subspace::full(Field f, std::size_t n)
{
    return Subspace(Matrix::identity(f, n));
}

std::vector<Vector> Subspace::vectors() const
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument("dimension mismatch in subspace membership");
    // Reduce v against the echelon basis.
    Vector w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pc = 0;
        while (basis_(i, pc).is_zero())
            ++pc;
        if (w[pc].is_zero())
            continue;
        FieldElement c = w[pc];
        for (std::size_t j = pc; j < w.size(); ++j)
            w[j] -= c * basis_(i, j);
    }
    return is_zero(w);
}

bool operator<(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j) {
            const auto& x = a.basis_(i, j);
            const auto& y = b.basis_(i, j);
            if (x < y)
                return true;
            if (y < x)
                return false;
        }
    return false;
}

Subspace span(Field f, const std::vector<Vector>& vectors, std::size_t ambient_dim)
{
    std::size_t r = 0;
    Matrix m = rref(Matrix::from_rows(f, ambient_dim, vectors), &r);
    Matrix basis(f, r, ambient_dim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            basis(i, j) = m(i, j);
    return Subspace(std::move(basis));
}

namespace {

void check_ambient(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    auto v = a.vectors();
    auto w = b.vectors();
    v.insert(v.end(), w.begin(), w.end());
    return span(a.field(), v, a.ambient_dim());
}

Subspace subspace_image(const Matrix& t, const Subspace& a)
{
    if (t.cols() != a.ambient_dim())
        throw std::invalid_argument("dimension mismatch in subspace image");
    std::vector<Vector> img;
    for (const auto& v : a.vectors())
        img.push_back(t * v);
    return span(t.field(), img, t.rows());
}

bool subspace_contains(const Subspace& a, const Vector& v)
{
    return a.contains(v);
}

bool subspace_leq(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    if (a.dim() > b.dim())
        return false;
    for (const auto& v : a.vectors())
        if (!b.contains(v))
            return false;
    return true;
}

Subspace kernel(const Matrix& t)
{
    std::size_t r = 0;
    Matrix m = rref(t, &r);
    const std::size_t n = t.cols();
    std::vector<std::size_t> pivot_col(r);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (m(i, c).is_zero())
            ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    std::vector<Vector> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(n, t.field().zero());
        v[free] = t.field().one();
        for (std::size_t i = 0; i < r; ++i)
            v[pivot_col[i]] = -m(i, free);
        gens.push_back(std::move(v));
    }
    return span(t.field(), gens, n);
}

Subspace subspace_preimage(const Matrix& t, const Subspace& a)
{
    if (t.rows() != a.ambient_dim())
        throw std::invalid_argument("dimension mismatch in subspace preimage");
    // a = kernel of its annihilator Y; preimage = kernel(Y t).
    Subspace ann = kernel(a.basis());
    if (ann.dim() == 0)
        return Subspace::full(t.field(), t.cols());
    return kernel(ann.basis() * t);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    check_ambient(a, b);
    const std::size_t n = a.ambient_dim();
    Subspace ann_a = kernel(a.basis());
    Subspace ann_b = kernel(b.basis());
    auto rows = ann_a.vectors();
    auto more = ann_b.vectors();
    rows.insert(rows.end(), more.begin(), more.end());
    if (rows.empty())
        return Subspace::full(a.field(), n);
    return kernel(Matrix::from_rows(a.field(), n, rows));
}

Subspace invariant_span(const Matrix& t, const std::vector<Vector>& seeds)
{
    if (!t.is_square())
        throw std::invalid_argument("invariant span needs a square matrix");
    Subspace x = span(t.field(), seeds, t.cols());
    for (std::size_t round = 0; round <= t.rows(); ++round) {
        Subspace next = subspace_sum(x, subspace_image(t, x));
        if (next.dim() == x.dim())
            return x;
        x = std::move(next);
    }
    return x;
}

}  // namespace gitstab
