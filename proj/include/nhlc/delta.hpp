#pragma once

#include <functional>
#include <vector>

#include "nhlc/algebra.hpp"
#include "nhlc/report.hpp"
#include "nhlc/spaces.hpp"

namespace nhlc {

/// x = sum_i coefficients[i] * [b_{tuples[i]}], with the ambiguity of that choice.
struct BracketDecomposition {
    Vector target;
    std::vector<Tuple> tuples;      // tuples with nonzero coefficient, lexicographic
    Vector coefficients;
    std::vector<Vector> kernel_basis;  // over decomposition_columns(a)
};

/// Ordered basis tuples with nonzero bracket, lexicographic. Permuted copies of a
/// tuple are all present, so the kernel records skew-symmetry relations.
std::vector<Tuple> decomposition_columns(const ColorAlgebra& a);

/// Minimal-pivot decomposition. Throws DecompositionError when x is outside [L,..,L].
BracketDecomposition bracket_decomposition(const ColorAlgebra& a, const Vector& x);

/// The per-tuple term sum_t eps(d, X_t) [alpha^k b_{t_1}, .., D b_{t_t}, .., alpha^k b_{t_n}].
using SlotFormula = std::function<Vector(const ColorAlgebra&, const HomMap&, int k, const Tuple&)>;
Vector delta_slot_sum(const ColorAlgebra& a, const HomMap& d, int k, const Tuple& t);

/// Caches the decomposition system of a centerless perfect algebra.
class DeltaEngine {
public:
    /// Throws HypothesisError unless the algebra is perfect and centerless.
    explicit DeltaEngine(const ColorAlgebra& a);

    const ColorAlgebra& algebra() const { return a_; }
    const std::vector<Tuple>& columns() const { return columns_; }
    const std::vector<Vector>& kernel() const { return kernel_; }
    /// Decomposition coefficients (over columns()) of basis vector j.
    const Vector& basis_coefficients(std::size_t j) const { return basis_coeffs_[j]; }

    /// delta_D built from the decompositions of the basis; no check on D.
    HomMap delta_unchecked(const HomMap& d, int k) const;
    /// Throws InputError unless D is a double alpha^k-derivation.
    HomMap delta(const HomMap& d, int k) const;

private:
    ColorAlgebra a_;
    std::vector<Tuple> columns_;
    std::vector<Vector> kernel_;
    std::vector<Vector> basis_coeffs_;
};

/// The slot formula vanishes on every relation among bracket columns.
ValidationReport verify_well_defined(const DeltaEngine& engine, const HomMap& d, int k,
                                     const SlotFormula& formula = delta_slot_sum);
/// verify_well_defined for every double-derivation basis map with k in [0, k_max].
ValidationReport verify_well_defined_all(const ColorAlgebra& a, int k_max);

/// delta_D is a double derivation; E = D - delta_D satisfies
/// E[x_1..x_n] = -eps(d, X_i)[alpha^k x_1, .., E x_i, .., alpha^k x_n] for every i,
/// and delta_E = -n E.
ValidationReport verify_delta_correction(const ColorAlgebra& a, int k_max);

/// delta_D is a derivation iff D is (and then delta_D = D); and
/// [D, ad_s(x)] = ad_{k+s}(delta_D x_1, x_2..) + sum_{j>=2} eps(d, X_j) ad_{k+s}(.., D x_j, ..).
ValidationReport verify_delta_on_derivations(const ColorAlgebra& a, int k_max);

/// delta_{[D1,D2]} = [delta_D1, delta_D2] for basis pairs with k + s <= k_max.
ValidationReport verify_delta_homomorphism(const ColorAlgebra& a, int k_max);

/// Double derivations (k in [0, k_max]) commuting with every given map.
GradedMapSpace centralizer_in_dder(const ColorAlgebra& a, int k_max, const std::vector<HomMap>& generators);
/// Centralizer of the inner derivations (s in [0, k_max]). Throws HypothesisError if not perfect.
GradedMapSpace centralizer_inn_in_dder(const ColorAlgebra& a, int k_max);

}  // namespace nhlc
