#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhlc/algebra.hpp"
#include "nhlc/linalg.hpp"
#include "nhlc/report.hpp"

namespace nhlc {

enum class SpaceKind { der, dder, inner, tder, centralizer };
std::string to_string(SpaceKind kind);

/// Basis maps of one (k, degree) component.
struct MapBlock {
    int k;
    GroupElement degree;
    std::vector<HomMap> basis;
};

/// Homogeneous map spaces grouped by (k, degree); blocks sorted by k then degree.
struct GradedMapSpace {
    SpaceKind kind;
    std::size_t ambient_dim = 0;
    std::vector<MapBlock> blocks;

    std::size_t dim() const;
    std::size_t dim_at(int k) const;
    std::vector<HomMap> maps_at(int k) const;
    std::vector<int> ks() const;
    /// Span at twist k of the row-major flattened matrices.
    Subspace span_at(int k) const;
    /// Appends the blocks of another space of the same kind and ambient dimension.
    void append(const GradedMapSpace& other);
};

/// {deg b_j - deg b_i} together with 0, sorted.
std::vector<GroupElement> candidate_degrees(const ColorAlgebra& a);

/// Alpha^k-derivations as the nullspace of the Leibniz system, per candidate degree.
GradedMapSpace derivation_space(const ColorAlgebra& a, int k);
/// Double alpha^k-derivations. Throws ArityError for n < 3.
GradedMapSpace double_derivation_space(const ColorAlgebra& a, int k);
/// Spans of ad_k over (n-1)-tuples from a graded basis of Fix(alpha).
GradedMapSpace inner_space(const ColorAlgebra& a, int k);

/// Union of the per-k spaces for k in [k_min, k_max].
GradedMapSpace collect_spaces(SpaceKind kind, const ColorAlgebra& a, int k_min, int k_max);

/// Graded basis of ker(alpha - id): per degree in sorted order, RREF within the block.
std::vector<Vector> fixed_basis(const ColorAlgebra& a);

/// y -> [x_1..x_{n-1}, alpha^k y]. Throws InputError for non-homogeneous or non-fixed x_i.
HomMap ad_map(const ColorAlgebra& a, const std::vector<Vector>& xs, int k);

/// An ad_k map together with the fixed-basis arguments that produced it.
struct InnerGenerator {
    std::vector<Vector> xs;
    HomMap map;
};
/// ad_k over non-decreasing tuples of fixed_basis(a); zero maps dropped.
std::vector<InnerGenerator> inner_generators(const ColorAlgebra& a, int k);

Subspace derived_subalgebra(const ColorAlgebra& a);
bool is_perfect(const ColorAlgebra& a);
Subspace center(const ColorAlgebra& a);
/// {x : [x, s, L..L] = 0 for all s in the span}.
Subspace centralizer(const ColorAlgebra& a, const std::vector<Vector>& spanning);

/// D1 D2 - eps(d1, d2) D2 D1.
HomMap color_commutator(const HomMap& d1, const HomMap& d2, const Bicharacter& eps);
/// D -> D alpha.
HomMap twist_map(const HomMap& d, const Matrix& alpha);

/// Double derivations are closed under the twist and the color commutator.
ValidationReport verify_closure_theorem(const ColorAlgebra& a, int k_max);
/// Inner derivations form an ideal of the double derivations. Throws HypothesisError if not perfect.
ValidationReport verify_inn_ideal(const ColorAlgebra& a, int k_max);

/// A map space repackaged as an arity-2 color algebra: bracket = color commutator,
/// alpha = D -> D alpha. Basis element i is the map maps[i].
struct MapAlgebra {
    ColorAlgebra algebra;
    std::vector<HomMap> maps;

    /// Coordinates of a map in the basis; nullopt if outside the span.
    std::optional<Vector> coordinates(const HomMap& d) const;
    HomMap map_of(const Vector& coords) const;
};

/// Throws TruncationError if the span is not closed inside the computed k-range and
/// ValidationError if the result is not a valid multiplicative algebra.
MapAlgebra maps_as_color_algebra(const GradedMapSpace& space, const ColorAlgebra& a, std::string name);

}  // namespace nhlc
