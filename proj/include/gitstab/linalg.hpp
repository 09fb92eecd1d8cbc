#pragma once

#include "gitstab/field.hpp"

#include <cstddef>
#include <vector>

namespace gitstab {

using Vector = std::vector<FieldElement>;

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_ints(Field f, const std::vector<std::vector<long long>>& rows);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    Matrix& operator*=(const FieldElement& c);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> a_;
};

bool is_zero(const Vector& v);

// Reduced row-echelon form (zero rows kept at the bottom).
Matrix rref(Matrix m, std::size_t* rank = nullptr);
std::size_t rank(const Matrix& m);
// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);

// Coefficients c_0..c_n of det(xI - m), c_n = 1.
std::vector<FieldElement> characteristic_polynomial(const Matrix& m);

// A subspace of k^n stored by its canonical RREF basis (rows).
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(Field f, std::size_t n);
    static Subspace full(Field f, std::size_t n);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> vectors() const;

    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    // Canonical order: by dimension, then entrywise on the echelon basis.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    friend Subspace span(Field, const std::vector<Vector>&, std::size_t);
    explicit Subspace(Matrix reduced) : basis_(std::move(reduced)) {}
    Matrix basis_;
};

Subspace span(Field f, const std::vector<Vector>& vectors, std::size_t ambient_dim);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_image(const Matrix& t, const Subspace& a);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
// {x : t x in a}
Subspace subspace_preimage(const Matrix& t, const Subspace& a);
bool subspace_contains(const Subspace& a, const Vector& v);
bool subspace_leq(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& t);
// Smallest t-invariant subspace containing the seeds.
Subspace invariant_span(const Matrix& t, const std::vector<Vector>& seeds);

}  // namespace gitstab
