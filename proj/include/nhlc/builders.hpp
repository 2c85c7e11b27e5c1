#pragma once

#include <string>
#include <vector>

#include "nhlc/algebra.hpp"

namespace nhlc {

/// All brackets zero. Throws InputError when alpha is not even for the degrees.
ColorAlgebra build_abelian(std::size_t dim, const Bicharacter& eps, const std::vector<GroupElement>& degrees,
                           const Matrix& alpha, std::size_t arity = 3, std::string name = "abelian");

/// Dimension 3, arity 3, trivial grading, alpha = id.
ColorAlgebra build_abelian_3();

/// (n+1)-dimensional simple n-Lie algebra: [e_1..^e_i..e_{n+1}] = (-1)^(n+i+1) e_i.
ColorAlgebra build_simple_nlie(std::size_t n);

/// Same basis, bracket phi∘[..], alpha = phi. A must have alpha = id and phi must be an
/// even morphism (InputError otherwise); the result must validate (ValidationError).
ColorAlgebra build_yau_twist(const ColorAlgebra& a, const Matrix& phi, std::string name);

/// Lie superalgebra: x, y odd, z even, [x,x] = [y,y] = z.
ColorAlgebra build_super_heis();

/// The simple 3-Lie algebra twisted by -id.
ColorAlgebra build_twisted_a4();

/// The simple 3-Lie algebra with Z/2 degrees (0,0,1,1) and trivial bicharacter.
ColorAlgebra build_regraded_a4();

/// Names accepted by builtin_example, in canonical order.
const std::vector<std::string>& builtin_names();
/// Throws InputError for unknown names.
ColorAlgebra builtin_example(const std::string& name);

}  // namespace nhlc
