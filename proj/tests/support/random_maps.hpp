#pragma once

#include <random>
#include <vector>

#include "nhlc/algebra.hpp"

namespace support {

/// Nonzero rational p/q with |p| <= 5, 1 <= q <= 3.
inline nhlc::Scalar random_scalar(std::mt19937& rng)
{
    std::uniform_int_distribution<int> num(1, 5), den(1, 3), sign(0, 1);
    nhlc::Scalar s(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    s.canonicalize();
    return s;
}

/// Random combination of the basis maps with nonzero coefficients; basis must be non-empty
/// and of one degree.
inline nhlc::HomMap random_combination(const std::vector<nhlc::HomMap>& basis, std::mt19937& rng)
{
    nhlc::HomMap out{basis.front().degree, nhlc::Matrix(basis.front().matrix.rows(), basis.front().matrix.cols())};
    for (const auto& b : basis) {
        const nhlc::Scalar c = random_scalar(rng);
        for (std::size_t r = 0; r < b.matrix.rows(); ++r)
            for (std::size_t col = 0; col < b.matrix.cols(); ++col)
                out.matrix(r, col) += c * b.matrix(r, col);
    }
    return out;
}

/// Adds a random nonzero value to one degree-compatible entry, keeping the map homogeneous.
inline nhlc::HomMap perturbed(const nhlc::ColorAlgebra& a, nhlc::HomMap d, std::mt19937& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (a.degree(r) == a.group().add(a.degree(c), d.degree))
                cells.emplace_back(r, c);
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    const auto [r, c] = cells[pick(rng)];
    d.matrix(r, c) += random_scalar(rng);
    return d;
}

}  // namespace support
