#include <doctest.h>

#include <random>

#include "nhlc/errors.hpp"
#include "nhlc/linalg.hpp"

using namespace nhlc;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int sparsity)
{
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> keep(0, sparsity);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng) == 0) {
                m(i, j) = Scalar(val(rng), 1 + keep(rng));
                m(i, j).canonicalize();
            }
    return m;
}

}  // namespace

TEST_CASE("scalar parse and format")
{
    CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
    CHECK(format_scalar(parse_scalar("-7")) == "-7");
    CHECK(format_scalar(parse_scalar("0/5")) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK(power(Scalar(2), -3) == Scalar(1, 8));
}

TEST_CASE("nullspace examples")
{
    CHECK(nullspace(Matrix::identity(3)).empty());
    CHECK(nullspace(Matrix(2, 3)).size() == 3);
    auto k = nullspace(Matrix::from_rows({{1, 1}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{-1, 1});
}

TEST_CASE("solve_particular examples")
{
    CHECK(solve_particular(Matrix::identity(2), {3, Scalar(-1, 2)}) == Vector{3, Scalar(-1, 2)});
    CHECK_FALSE(solve_particular(Matrix(2, 2), {1, 0}).has_value());
    CHECK(solve_particular(Matrix::from_rows({{2}}, 1), {1}) == Vector{Scalar(1, 2)});
    // free variables are zero
    CHECK(solve_particular(Matrix::from_rows({{1, 1}}, 2), {5}) == Vector{5, 0});
}

TEST_CASE("subspace examples")
{
    auto e1 = Subspace::span(2, {{1, 0}});
    auto e2 = Subspace::span(2, {{0, 1}});
    auto both = Subspace::span(2, {{1, 0}, {0, 1}});
    CHECK(both.contains(e1));
    CHECK_FALSE(e1.contains(both));
    CHECK(subspace_intersection(e1, e2).dim() == 0);
    CHECK(Subspace::span(2, {{1, 1}}) == Subspace::span(2, {{2, 2}}));
    CHECK(subspace_sum(e1, e2) == Subspace::whole(2));
    CHECK_THROWS_AS(e1.contains(Subspace::whole(3)), ShapeError);
}

TEST_CASE("random matrices: rank-nullity, kernel and solve identities")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
        Matrix m = random_matrix(rng, r, c, trial % 3);
        auto kernel = nullspace(m);
        CHECK(rank(m) + kernel.size() == c);
        for (const auto& v : kernel)
            CHECK(is_zero(m * v));
        Vector x(c);
        for (auto& xi : x)
            xi = Scalar(static_cast<int>(rng() % 9) - 4);
        Vector b = m * x;
        auto sol = solve_particular(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("row reduction is independent of row order")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 5, 6, 1);
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < m.rows(); ++i)
            rows.push_back(m.row(i));
        RowReducer forward(6), backward(6);
        for (const auto& row : rows)
            forward.add_row(row);
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            backward.add_row(*it);
        CHECK(forward.rref() == backward.rref());
        CHECK(forward.nullspace() == backward.nullspace());
    }
}

TEST_CASE("inverse and coordinates")
{
    Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, 2)).has_value());

    auto s = Subspace::span(3, {{1, 2, 0}, {0, 1, 1}});
    Vector v{2, 5, 1};
    auto coords = s.coordinates(v);
    REQUIRE(coords.has_value());
    Vector rebuilt = zero_vector(3);
    for (std::size_t i = 0; i < s.dim(); ++i)
        axpy(rebuilt, (*coords)[i], s.basis()[i]);
    CHECK(rebuilt == v);
    CHECK_FALSE(s.coordinates({0, 0, 1}).has_value());
}
