#include <doctest.h>

#include <random>

#include "nhlc/builders.hpp"
#include "nhlc/delta.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/oracle.hpp"
#include "support/random_maps.hpp"

using namespace nhlc;

TEST_CASE("bracket decomposition")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const auto dec = bracket_decomposition(a4, unit_vector(4, 3));
    REQUIRE(dec.tuples.size() == 1);
    CHECK(dec.tuples.front() == Tuple{0, 1, 2});
    CHECK(dec.coefficients.front() == 1);
    CHECK(decomposition_columns(a4).size() == 24);
    CHECK(dec.kernel_basis.size() == 20);
    CHECK_THROWS_AS(bracket_decomposition(build_super_heis(), unit_vector(3, 0)), DecompositionError);
}

TEST_CASE("delta needs a perfect centerless algebra")
{
    CHECK_THROWS_AS(DeltaEngine{build_abelian_3()}, HypothesisError);
    CHECK_THROWS_AS(DeltaEngine{build_super_heis()}, HypothesisError);
    CHECK_NOTHROW(DeltaEngine{build_twisted_a4()});
}

TEST_CASE("delta is linear and commutes with alpha")
{
    std::mt19937 rng(5);
    for (const char* name : {"a4", "twisted-a4"}) {
        CAPTURE(name);
        const ColorAlgebra a = builtin_example(name);
        const DeltaEngine engine(a);
        for (int k = 0; k <= 1; ++k) {
            const auto basis = double_derivation_space(a, k).maps_at(k);
            REQUIRE(basis.size() >= 2);
            const Scalar p = support::random_scalar(rng), q = support::random_scalar(rng);
            HomMap combo{basis[0].degree, Matrix(4, 4)};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    combo.matrix(r, c) = p * basis[0].matrix(r, c) + q * basis[1].matrix(r, c);
            const Matrix d0 = engine.delta(basis[0], k).matrix, d1 = engine.delta(basis[1], k).matrix;
            Matrix expected(4, 4);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    expected(r, c) = p * d0(r, c) + q * d1(r, c);
            const HomMap delta = engine.delta(combo, k);
            CHECK(delta.matrix == expected);
            CHECK(delta.matrix * a.alpha() == a.alpha() * delta.matrix);
        }
    }
}

TEST_CASE("delta fixes derivations and rejects non-double-derivations")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const DeltaEngine engine(a4);
    for (const auto& d : derivation_space(a4, 0).maps_at(0))
        CHECK(engine.delta(d, 0).matrix == d.matrix);
    HomMap id{a4.group().zero(), Matrix::identity(4)};
    CHECK_THROWS_AS(engine.delta(id, 0), InputError);
}

TEST_CASE("the slot formula is independent of the decomposition")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const DeltaEngine engine(a4);
    const auto basis = double_derivation_space(a4, 0).maps_at(0);
    for (const auto& d : basis)
        CHECK(verify_well_defined(engine, d, 0).ok());
    // Dropping the Koszul sign of a slot breaks the skew relations.
    const SlotFormula unsigned_slots = [](const ColorAlgebra& a, const HomMap& d, int k, const Tuple& t) {
        const Matrix ak = a.alpha_power(k);
        Vector out = zero_vector(a.dim());
        for (std::size_t s = 0; s < t.size(); ++s) {
            std::vector<Vector> args;
            for (std::size_t i = 0; i < t.size(); ++i)
                args.push_back(i == s ? d.matrix.column(t[i]) : ak.column(t[i]));
            axpy(out, (s % 2) ? Scalar(-1) : Scalar(1), a.bracket(args));
        }
        return out;
    };
    for (const auto& d : basis)
        CHECK_FALSE(verify_well_defined(engine, d, 0, unsigned_slots).ok());
}

TEST_CASE("delta verifiers on the simple and twisted algebras")
{
    for (const char* name : {"a4", "twisted-a4", "a4-z2"}) {
        CAPTURE(name);
        const ColorAlgebra a = builtin_example(name);
        CHECK(verify_well_defined_all(a, 1).ok());
        CHECK(verify_delta_correction(a, 1).ok());
        CHECK(verify_delta_on_derivations(a, 1).ok());
        CHECK(verify_delta_homomorphism(a, 1).ok());
    }
}

TEST_CASE("centralizer of the inner derivations")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    CHECK(centralizer_inn_in_dder(a4, 1).dim() == 0);
    // With no generators nothing is constrained.
    CHECK(centralizer_in_dder(a4, 1, {}).dim() == 12);
    // Fix(-id) = 0 leaves Inn empty, so every double derivation commutes with it.
    CHECK(centralizer_inn_in_dder(build_twisted_a4(), 1).dim() == 12);
    CHECK_THROWS_AS(centralizer_inn_in_dder(build_abelian_3(), 1), HypothesisError);
}
