#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nhlc/scalar.hpp"

namespace nhlc {

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);

    /// Row-major flattening, used to treat maps as vectors of End(L).
    const std::vector<Scalar>& flat() const { return data_; }
    static Matrix unflatten(const Vector& flat, std::size_t rows, std::size_t cols);

    bool is_zero() const;
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

Matrix matrix_power(const Matrix& a, unsigned k);
/// nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Incremental fraction-free row reduction.
///
/// Rows are scaled to primitive integer vectors and kept fully reduced against each
/// other; pivots are the leftmost nonzero column. The reduced row space, and hence
/// rref() and nullspace(), do not depend on insertion order.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row increased the rank.
    bool add_row(std::span<const Scalar> row);
    bool add_sparse_row(const std::vector<std::pair<std::size_t, Scalar>>& entries);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    std::vector<std::size_t> pivot_columns() const;

    /// Canonical reduced row echelon basis of the row space (pivot entries 1).
    std::vector<Vector> rref() const;
    /// Kernel basis: one vector per free column f with entry 1 at f, pivot order leftmost first.
    std::vector<Vector> nullspace() const;
    /// Reduces v against the stored rows; zero iff v lies in the row space.
    bool in_row_space(std::span<const Scalar> v) const;

private:
    struct IntRow {
        std::size_t pivot;
        std::vector<mpz_class> entries;
    };
    bool insert(std::vector<mpz_class> row);
    void reduce(std::vector<mpz_class>& row) const;

    std::size_t cols_;
    std::vector<IntRow> rows_;  // sorted by pivot
};

std::vector<Vector> nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vector> rref_rows(const Matrix& m);
/// Particular solution of m x = b with free variables zero; nullopt when inconsistent.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& b);

/// A subspace of Q^ambient stored by its canonical RREF basis, so equal subspaces
/// compare equal structurally.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in basis(); nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

}  // namespace nhlc
