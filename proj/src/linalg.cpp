#include "nhlc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "nhlc/errors.hpp"

namespace nhlc {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw ShapeError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    if (v.size() != rows_)
        throw ShapeError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::unflatten(const Vector& flat, std::size_t rows, std::size_t cols)
{
    if (flat.size() != rows * cols)
        throw ShapeError("flattened matrix has wrong length");
    Matrix m(rows, cols);
    m.data_ = flat;
    return m;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("matrix product dimension mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    m(i, j) += aik * b(k, j);
        }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols() != v.size())
        throw ShapeError("matrix-vector dimension mismatch");
    Vector out(a.rows(), Scalar(0));
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (v[k] == 0)
            continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, k) != 0)
                out[i] += a(i, k) * v[k];
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix sum dimension mismatch");
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) + b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix difference dimension mismatch");
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) - b(i, j);
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = s * a(i, j);
    return m;
}

Matrix matrix_power(const Matrix& a, unsigned k)
{
    Matrix result = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i)
        result = result * a;
    return result;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RowReducer red(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        Vector row(2 * n, Scalar(0));
        for (std::size_t c = 0; c < n; ++c)
            row[c] = a(r, c);
        row[n + r] = 1;
        red.add_row(row);
    }
    auto rows = red.rref();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i][i] != 1)
            return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            if (c != i && rows[i][c] != 0)
                return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c)
            inv(i, c) = rows[i][n + c];
    return inv;
}

// ---------------------------------------------------------------------------

namespace {

void make_primitive(std::vector<mpz_class>& row)
{
    mpz_class g = 0;
    for (const auto& x : row)
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
    if (g > 1)
        for (auto& x : row)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<mpz_class> to_integer_row(std::span<const Scalar> row)
{
    mpz_class l = 1;
    for (const auto& x : row)
        if (x != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0)
            out[i] = row[i].get_num() * (l / row[i].get_den());
    return out;
}

std::size_t first_nonzero(const std::vector<mpz_class>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0)
            return i;
    return row.size();
}

}  // namespace

void RowReducer::reduce(std::vector<mpz_class>& row) const
{
    mpz_class a, b;
    for (const auto& r : rows_) {
        if (row[r.pivot] == 0)
            continue;
        a = r.entries[r.pivot];
        b = row[r.pivot];
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] != 0)
                row[c] *= a;
            if (r.entries[c] != 0)
                row[c] -= b * r.entries[c];
        }
        make_primitive(row);
    }
}

bool RowReducer::insert(std::vector<mpz_class> row)
{
    reduce(row);
    std::size_t p = first_nonzero(row);
    if (p == cols_)
        return false;
    make_primitive(row);
    if (row[p] < 0)
        for (auto& x : row)
            x = -x;
    mpz_class a, b;
    for (auto& r : rows_) {
        if (r.entries[p] == 0)
            continue;
        a = row[p];
        b = r.entries[p];
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r.entries[c] != 0)
                r.entries[c] *= a;
            if (row[c] != 0)
                r.entries[c] -= b * row[c];
        }
        make_primitive(r.entries);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                                [](const IntRow& r, std::size_t piv) { return r.pivot < piv; });
    rows_.insert(pos, IntRow{p, std::move(row)});
    return true;
}

bool RowReducer::add_row(std::span<const Scalar> row)
{
    if (row.size() != cols_)
        throw ShapeError("row length does not match reducer width");
    return insert(to_integer_row(row));
}

bool RowReducer::add_sparse_row(const std::vector<std::pair<std::size_t, Scalar>>& entries)
{
    Vector dense(cols_, Scalar(0));
    for (const auto& [c, v] : entries) {
        if (c >= cols_)
            throw ShapeError("sparse row index out of range");
        dense[c] += v;
    }
    return add_row(dense);
}

std::vector<std::size_t> RowReducer::pivot_columns() const
{
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_)
        out.push_back(r.pivot);
    return out;
}

std::vector<Vector> RowReducer::rref() const
{
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        Vector v(cols_, Scalar(0));
        for (std::size_t c = 0; c < cols_; ++c)
            if (r.entries[c] != 0) {
                v[c] = Scalar(r.entries[c], r.entries[r.pivot]);
                v[c].canonicalize();
            }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> RowReducer::nullspace() const
{
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& r : rows_)
        is_pivot[r.pivot] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols_, Scalar(0));
        v[f] = 1;
        for (const auto& r : rows_)
            if (r.entries[f] != 0) {
                v[r.pivot] = Scalar(-r.entries[f], r.entries[r.pivot]);
                v[r.pivot].canonicalize();
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowReducer::in_row_space(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw ShapeError("vector length does not match reducer width");
    auto row = to_integer_row(v);
    reduce(row);
    return first_nonzero(row) == cols_;
}

namespace {

RowReducer reducer_of(const Matrix& m)
{
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.add_row(m.row(r));
    return red;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) { return reducer_of(m).nullspace(); }

std::size_t rank(const Matrix& m) { return reducer_of(m).rank(); }

std::vector<Vector> rref_rows(const Matrix& m) { return reducer_of(m).rref(); }

std::optional<Vector> solve_particular(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw ShapeError("right-hand side length mismatch");
    const std::size_t n = m.cols();
    RowReducer red(n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row = m.row(r);
        row.push_back(b[r]);
        red.add_row(row);
    }
    Vector x(n, Scalar(0));
    for (const auto& row : red.rref()) {
        std::size_t p = 0;
        while (row[p] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        x[p] = row[n];
    }
    return x;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    RowReducer red(ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient)
            throw ShapeError("vector dimension does not match ambient dimension");
        red.add_row(v);
    }
    Subspace s(ambient);
    s.basis_ = red.rref();
    return s;
}

Subspace Subspace::whole(std::size_t ambient)
{
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        s.basis_.push_back(unit_vector(ambient, i));
    return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const
{
    if (v.size() != ambient_)
        throw ShapeError("vector dimension does not match ambient dimension");
    Vector residual = v;
    Vector coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = 0;
        while (basis_[i][p] == 0)
            ++p;
        coords[i] = residual[p];
        axpy(residual, -coords[i], basis_[i]);
    }
    if (!is_zero(residual))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw ShapeError("subspaces live in different ambient spaces");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vector& v) { return contains(v); });
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw ShapeError("subspaces live in different ambient spaces");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw ShapeError("subspaces live in different ambient spaces");
    std::vector<Vector> columns = a.basis();
    for (const auto& v : b.basis()) {
        Vector neg = v;
        for (auto& x : neg)
            x = -x;
        columns.push_back(std::move(neg));
    }
    Matrix m = Matrix::from_columns(columns, a.ambient());
    std::vector<Vector> common;
    for (const auto& k : nullspace(m)) {
        Vector v = zero_vector(a.ambient());
        for (std::size_t i = 0; i < a.dim(); ++i)
            axpy(v, k[i], a.basis()[i]);
        common.push_back(std::move(v));
    }
    return Subspace::span(a.ambient(), common);
}

}  // namespace nhlc
