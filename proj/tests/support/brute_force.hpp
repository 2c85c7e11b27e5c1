#pragma once

// Reference computations that share no code with the library: the 4-dimensional simple
// 3-Lie bracket from the Levi-Civita symbol, every matrix entry as an unknown, every
// ordered tuple as a constraint, and dense elimination pivoting from the last column.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <vector>

namespace brute {

using Q = mpq_class;
using Row = std::vector<Q>;
using Map = std::vector<std::vector<Q>>;  // Map[r][c]: coefficient of e_r in D(e_c)
using Bracket3 = std::function<Row(std::size_t, std::size_t, std::size_t)>;

/// Rank by elimination choosing pivot columns from the last one down.
std::size_t rank(std::vector<Row> rows, std::size_t cols);

/// [e_i, e_j, e_k] = sum_l sign(i j k l) e_l on four basis vectors.
Row levi_civita_bracket(std::size_t i, std::size_t j, std::size_t k);
Row zero_bracket(std::size_t i, std::size_t j, std::size_t k, std::size_t m);

/// Linear constraints on the m*m entries of D (index r*m + c) from the Leibniz rule
/// over all ordered basis triples, alpha = id.
std::vector<Row> derivation_rows(const Bracket3& bracket, std::size_t m);
/// Same for D[x1, x2, [y1, y2, y3]] over all ordered x and y.
std::vector<Row> double_derivation_rows(const Bracket3& bracket, std::size_t m);

/// The maps y -> [e_i, e_j, y] for i < j, flattened row-major.
std::vector<Row> inner_maps(const Bracket3& bracket, std::size_t m);

/// dim {x : [x, e_j, e_k] = 0 for all j, k}.
std::size_t center_dim(const Bracket3& bracket, std::size_t m);
/// dim span{[e_i, e_j, e_k]}.
std::size_t derived_dim(const Bracket3& bracket, std::size_t m);

/// True when every row vanishes on the vector.
bool satisfies(const std::vector<Row>& rows, const Row& v);

}  // namespace brute
