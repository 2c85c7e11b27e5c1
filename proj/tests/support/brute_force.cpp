#include "support/brute_force.hpp"

#include <utility>

namespace brute {

std::size_t rank(std::vector<Row> rows, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = cols; c-- > 0 && r < rows.size();) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c] == 0)
                continue;
            const Q f = rows[q][c] / rows[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[q][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

int permutation_sign(std::vector<std::size_t> p)
{
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j])
                return 0;
            if (p[i] > p[j])
                sign = -sign;
        }
    return sign;
}

Row zeros(std::size_t n)
{
    return Row(n, Q(0));
}

/// Coefficients (over D entries) of the vector D(v), one Row per output coordinate.
std::vector<Row> apply_unknown(const Row& v, std::size_t m)
{
    std::vector<Row> out(m, zeros(m * m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            out[r][r * m + c] += v[c];
    return out;
}

}  // namespace

Row levi_civita_bracket(std::size_t i, std::size_t j, std::size_t k)
{
    Row out = zeros(4);
    for (std::size_t l = 0; l < 4; ++l)
        out[l] = permutation_sign({i, j, k, l});
    return out;
}

Row zero_bracket(std::size_t, std::size_t, std::size_t, std::size_t m)
{
    return zeros(m);
}

std::vector<Row> derivation_rows(const Bracket3& bracket, std::size_t m)
{
    std::vector<Row> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                // D[e_i,e_j,e_k] - [D e_i,e_j,e_k] - [e_i,D e_j,e_k] - [e_i,e_j,D e_k], D e_c = sum_r D[r][c] e_r.
                std::vector<Row> eq = apply_unknown(bracket(i, j, k), m);
                for (std::size_t r = 0; r < m; ++r) {
                    const Row a = bracket(r, j, k), b = bracket(i, r, k), c = bracket(i, j, r);
                    for (std::size_t l = 0; l < m; ++l) {
                        eq[l][r * m + i] -= a[l];
                        eq[l][r * m + j] -= b[l];
                        eq[l][r * m + k] -= c[l];
                    }
                }
                for (auto& row : eq)
                    rows.push_back(std::move(row));
            }
    return rows;
}

std::vector<Row> double_derivation_rows(const Bracket3& bracket, std::size_t m)
{
    auto bracket_vec = [&](std::size_t i, std::size_t j, const Row& v) {
        Row out = zeros(m);
        for (std::size_t p = 0; p < m; ++p)
            if (v[p] != 0) {
                const Row b = bracket(i, j, p);
                for (std::size_t l = 0; l < m; ++l)
                    out[l] += v[p] * b[l];
            }
        return out;
    };
    std::vector<Row> rows;
    for (std::size_t x1 = 0; x1 < m; ++x1)
        for (std::size_t x2 = 0; x2 < m; ++x2)
            for (std::size_t y1 = 0; y1 < m; ++y1)
                for (std::size_t y2 = 0; y2 < m; ++y2)
                    for (std::size_t y3 = 0; y3 < m; ++y3) {
                        const Row inner = bracket(y1, y2, y3);
                        std::vector<Row> eq = apply_unknown(bracket_vec(x1, x2, inner), m);
                        for (std::size_t r = 0; r < m; ++r) {
                            const Row t1 = bracket_vec(r, x2, inner);
                            const Row t2 = bracket_vec(x1, r, inner);
                            const Row t3 = bracket_vec(x1, x2, bracket(r, y2, y3));
                            const Row t4 = bracket_vec(x1, x2, bracket(y1, r, y3));
                            const Row t5 = bracket_vec(x1, x2, bracket(y1, y2, r));
                            for (std::size_t l = 0; l < m; ++l) {
                                eq[l][r * m + x1] -= t1[l];
                                eq[l][r * m + x2] -= t2[l];
                                eq[l][r * m + y1] -= t3[l];
                                eq[l][r * m + y2] -= t4[l];
                                eq[l][r * m + y3] -= t5[l];
                            }
                        }
                        for (auto& row : eq)
                            rows.push_back(std::move(row));
                    }
    return rows;
}

std::vector<Row> inner_maps(const Bracket3& bracket, std::size_t m)
{
    std::vector<Row> maps;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Row flat = zeros(m * m);
            for (std::size_t c = 0; c < m; ++c) {
                const Row image = bracket(i, j, c);
                for (std::size_t r = 0; r < m; ++r)
                    flat[r * m + c] = image[r];
            }
            maps.push_back(std::move(flat));
        }
    return maps;
}

std::size_t center_dim(const Bracket3& bracket, std::size_t m)
{
    std::vector<Row> rows;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l) {
                Row row = zeros(m);
                for (std::size_t i = 0; i < m; ++i)
                    row[i] = bracket(i, j, k)[l];
                rows.push_back(std::move(row));
            }
    return m - rank(rows, m);
}

std::size_t derived_dim(const Bracket3& bracket, std::size_t m)
{
    std::vector<Row> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                rows.push_back(bracket(i, j, k));
    return rank(rows, m);
}

bool satisfies(const std::vector<Row>& rows, const Row& v)
{
    for (const auto& row : rows) {
        Q s = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += row[i] * v[i];
        if (s != 0)
            return false;
    }
    return true;
}

}  // namespace brute
