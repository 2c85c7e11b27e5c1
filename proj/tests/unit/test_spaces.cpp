#include <doctest.h>

#include <random>

#include "nhlc/builders.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/oracle.hpp"
#include "nhlc/spaces.hpp"
#include "support/pinned.hpp"
#include "support/random_maps.hpp"

using namespace nhlc;

TEST_CASE("pinned dimensions agree with the reference computation")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    CHECK(derivation_space(a4, 0).dim() == pinned::der_a4);
    CHECK(double_derivation_space(a4, 0).dim() == pinned::dder_a4);
    CHECK(center(a4).dim() == pinned::center_a4);
    CHECK(is_perfect(a4) == pinned::perfect_a4);
    CHECK(derivation_space(build_abelian_3(), 0).dim() == pinned::der_abelian3);
    CHECK(inner_space(a4, 0).span_at(0) == derivation_space(a4, 0).span_at(0));
}

TEST_CASE("space dimensions of the other builtins")
{
    const ColorAlgebra h = build_super_heis();
    CHECK(derivation_space(h, 0).dim() == 4);
    CHECK(inner_space(h, 0).dim() == 2);
    CHECK(center(h).dim() == 1);
    CHECK_FALSE(is_perfect(h));
    CHECK_THROWS_AS(double_derivation_space(h, 0), ArityError);

    const ColorAlgebra t = build_twisted_a4();
    CHECK(derivation_space(t, 1).dim() == 6);
    CHECK(inner_space(t, 0).dim() == 0);
    CHECK(fixed_basis(t).empty());

    const ColorAlgebra s = build_simple_nlie(4);
    CHECK(derivation_space(s, 0).dim() == 10);
    CHECK(double_derivation_space(s, 0).dim() == 10);
}

TEST_CASE("graded candidate degrees")
{
    const ColorAlgebra h = build_super_heis();
    CHECK(candidate_degrees(h).size() == 2);
    const auto der = derivation_space(h, 0);
    for (const auto& block : der.blocks)
        for (const auto& d : block.basis)
            CHECK(respects_degree(h, d.matrix, block.degree));
}

TEST_CASE("solver spans and oracles agree on random maps")
{
    std::mt19937 rng(2024);
    const ColorAlgebra a4 = build_simple_nlie(3);
    for (int k = 0; k <= 1; ++k) {
        const auto der = derivation_space(a4, k);
        const Subspace span = der.span_at(k);
        for (int trial = 0; trial < 20; ++trial) {
            const HomMap in = support::random_combination(der.blocks.front().basis, rng);
            CHECK(is_derivation(a4, in, k));
            const HomMap off = support::perturbed(a4, in, rng);
            if (!span.contains(off.matrix.flat()))
                CHECK_FALSE(is_derivation(a4, off, k));
        }
    }
}

TEST_CASE("ad maps")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const HomMap ad = ad_map(a4, {unit_vector(4, 0), unit_vector(4, 1)}, 0);
    CHECK(ad.matrix.column(2) == unit_vector(4, 3));
    CHECK(is_derivation(a4, ad, 0));
    Vector mixed = unit_vector(3, 0);
    mixed[2] = 1;
    const ColorAlgebra h = build_super_heis();
    CHECK_THROWS_AS(ad_map(h, {mixed}, 0), InputError);
    CHECK_THROWS_AS(ad_map(build_twisted_a4(), {unit_vector(4, 0), unit_vector(4, 1)}, 0), InputError);
}

TEST_CASE("centralizer and derived algebra")
{
    const ColorAlgebra h = build_super_heis();
    CHECK(derived_subalgebra(h).dim() == 1);
    CHECK(center(h).contains(unit_vector(3, 2)));
    CHECK(centralizer(h, {unit_vector(3, 2)}).dim() == 3);
    const ColorAlgebra a4 = build_simple_nlie(3);
    CHECK(centralizer(a4, {unit_vector(4, 0)}).dim() == 1);
    CHECK(center(build_abelian_3()).dim() == 3);
}

TEST_CASE("color commutator and twist")
{
    const auto g = GradingGroup::z2();
    HomMap odd1{g.element({1}), Matrix(2, 2)};
    odd1.matrix(0, 1) = 1;
    HomMap odd2{g.element({1}), Matrix(2, 2)};
    odd2.matrix(1, 0) = 1;
    // Odd maps anticommute: [D1, D2] = D1 D2 + D2 D1 = id.
    CHECK(color_commutator(odd1, odd2, Bicharacter::super()).matrix == Matrix::identity(2));
    CHECK(color_commutator(odd1, odd2, Bicharacter::super()).degree == g.zero());
    Matrix alpha = Matrix::identity(2);
    alpha(1, 1) = 3;
    CHECK(twist_map(odd1, alpha).matrix(0, 1) == 3);
}

TEST_CASE("double derivations are closed and inner derivations form an ideal")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    CHECK(verify_closure_theorem(a4, 1).ok());
    CHECK(verify_inn_ideal(a4, 1).ok());
    CHECK(verify_closure_theorem(build_abelian_3(), 1).ok());
    CHECK_THROWS_AS(verify_inn_ideal(build_abelian_3(), 1), HypothesisError);
    CHECK_THROWS_AS(verify_closure_theorem(build_super_heis(), 1), ArityError);
}

TEST_CASE("map spaces as color algebras")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const MapAlgebra der = maps_as_color_algebra(collect_spaces(SpaceKind::der, a4, 0, 1), a4, "DER");
    CHECK(der.algebra.dim() == 6);
    CHECK(der.algebra.arity() == 2);
    CHECK(is_perfect(der.algebra));
    for (std::size_t i = 0; i < der.maps.size(); ++i)
        CHECK(der.coordinates(der.maps[i]) == unit_vector(6, i));
    const ColorAlgebra t = build_twisted_a4();
    CHECK_THROWS_AS(maps_as_color_algebra(collect_spaces(SpaceKind::der, t, 0, 1), t, "DER"), ValidationError);
}
