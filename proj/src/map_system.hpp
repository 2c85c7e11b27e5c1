#pragma once

// Linear systems whose unknowns are the free entries of a homogeneous map.

#include <functional>
#include <span>
#include <vector>

#include "nhlc/algebra.hpp"
#include "nhlc/spaces.hpp"

namespace nhlc::detail {

/// Unknown entries of a degree-d map: cell (j, i) is free iff deg b_j = deg b_i + d.
struct Unknowns {
    std::size_t m = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    std::vector<long> index;  // m*m, -1 where forced zero

    Unknowns(const ColorAlgebra& a, const GroupElement& d) : m(a.dim()), index(m * m, -1)
    {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (a.degree(j) == a.group().add(a.degree(i), d)) {
                    index[j * m + i] = static_cast<long>(cells.size());
                    cells.emplace_back(j, i);
                }
    }
    std::size_t count() const { return cells.size(); }
    long at(std::size_t j, std::size_t i) const { return index[j * m + i]; }

    HomMap to_map(const GroupElement& d, const Vector& values) const
    {
        HomMap out{d, Matrix(m, m)};
        for (std::size_t u = 0; u < cells.size(); ++u)
            out.matrix(cells[u].first, cells[u].second) = values[u];
        return out;
    }
};

/// Coefficient block of one constraint family: rows = output coordinates, cols = unknowns.
using Equations = Matrix;

/// Rows of D alpha - alpha D = 0.
inline Equations commutation_equations(const Unknowns& u, const Matrix& alpha)
{
    const std::size_t m = u.m;
    Equations e(m * m, u.count());
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t l = 0; l < m; ++l) {
                if (long x = u.at(r, l); x >= 0 && alpha(l, c) != 0)
                    e(r * m + c, static_cast<std::size_t>(x)) += alpha(l, c);
                if (long x = u.at(l, c); x >= 0 && alpha(r, l) != 0)
                    e(r * m + c, static_cast<std::size_t>(x)) -= alpha(r, l);
            }
    return e;
}

/// Adds coefficient * D(value) to the equation block.
inline void add_map_applied(Equations& e, const Unknowns& u, const Vector& value, const Scalar& coefficient)
{
    for (std::size_t l = 0; l < u.m; ++l) {
        if (value[l] == 0)
            continue;
        for (std::size_t j = 0; j < u.m; ++j)
            if (long x = u.at(j, l); x >= 0)
                e(j, static_cast<std::size_t>(x)) += coefficient * value[l];
    }
}

/// Adds coefficient * f(D b_i) where f is linear and f(b_j) is supplied by image(j).
template <class Image>
void add_slot_term(Equations& e, const Unknowns& u, std::size_t i, const Scalar& coefficient, Image&& image)
{
    for (std::size_t j = 0; j < u.m; ++j) {
        long x = u.at(j, i);
        if (x < 0)
            continue;
        Vector v = image(j);
        for (std::size_t r = 0; r < u.m; ++r)
            if (v[r] != 0)
                e(r, static_cast<std::size_t>(x)) += coefficient * v[r];
    }
}

/// Kernel of the stacked equation blocks, reduced in task order.
inline std::vector<HomMap> solve_maps(const Unknowns& u, const GroupElement& d, const Equations& commute,
                               std::vector<Equations> blocks)
{
    RowReducer reducer(u.count());
    auto feed = [&](const Equations& e) {
        for (std::size_t r = 0; r < e.rows() && reducer.rank() < u.count(); ++r) {
            bool any = false;
            for (std::size_t c = 0; c < e.cols() && !any; ++c)
                any = e(r, c) != 0;
            if (any)
                reducer.add_row(std::span<const Scalar>(&e(r, 0), e.cols()));
        }
    };
    feed(commute);
    for (const auto& e : blocks)
        feed(e);
    std::vector<HomMap> out;
    for (const auto& v : reducer.nullspace())
        out.push_back(u.to_map(d, v));
    return out;
}

inline std::vector<Vector> columns_of(const Matrix& m)
{
    std::vector<Vector> cols(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        cols[i] = m.column(i);
    return cols;
}

inline GradedMapSpace space_by_degree(SpaceKind kind, const ColorAlgebra& a, int k,
                               const std::function<std::vector<HomMap>(const GroupElement&)>& solve)
{
    GradedMapSpace space{kind, a.dim(), {}};
    for (const auto& d : candidate_degrees(a)) {
        auto basis = solve(d);
        if (!basis.empty())
            space.blocks.push_back({k, d, std::move(basis)});
    }
    return space;
}

}  // namespace nhlc::detail
