#include <doctest.h>

#include <random>

#include "nhlc/builders.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/oracle.hpp"
#include "nhlc/spaces.hpp"
#include "support/random_maps.hpp"

using namespace nhlc;

namespace {

HomMap rotation(std::size_t i, std::size_t j)
{
    HomMap d{GradingGroup::trivial().zero(), Matrix(4, 4)};
    d.matrix(i, j) = -1;
    d.matrix(j, i) = 1;
    return d;
}

}  // namespace

TEST_CASE("infinitesimal rotations are derivations of the simple 3-Lie algebra")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    CHECK(is_derivation(a4, rotation(0, 1), 0));
    CHECK(is_double_derivation(a4, rotation(2, 3), 1));
    HomMap stretch{GradingGroup::trivial().zero(), Matrix::identity(4)};
    const auto verdict = is_derivation(a4, stretch, 0);
    CHECK_FALSE(verdict);
    CHECK(verdict.witness.find("[e1,e1,e2]") == std::string::npos);
    CHECK_FALSE(verdict.witness.empty());
}

TEST_CASE("oracle rejects maps that break the grading or alpha")
{
    const ColorAlgebra h = build_super_heis();
    HomMap mixed{h.group().zero(), Matrix(3, 3)};
    mixed.matrix(2, 0) = 1;  // odd -> even with degree 0
    CHECK_FALSE(is_derivation(h, mixed, 0));
    const ColorAlgebra t = build_twisted_a4();
    HomMap e11{t.group().zero(), Matrix(4, 4)};
    e11.matrix(0, 0) = 1;
    CHECK(is_derivation(t, e11, 0).witness.empty() == false);
    CHECK_THROWS_AS(is_double_derivation(h, mixed, 0), ArityError);
    CHECK_THROWS_AS(is_triple_derivation(t, e11, 0), ArityError);
}

TEST_CASE("tuple order does not change the verdict")
{
    std::mt19937 rng(11);
    for (const auto& name : builtin_names()) {
        const ColorAlgebra a = builtin_example(name);
        CAPTURE(name);
        for (int k = 0; k <= 1; ++k) {
            const auto space = derivation_space(a, k);
            for (const auto& block : space.blocks) {
                const HomMap in_span = support::random_combination(block.basis, rng);
                CHECK(is_derivation(a, in_span, k, TupleOrder::nondecreasing));
                CHECK(is_derivation(a, in_span, k, TupleOrder::ordered));
                const HomMap off = support::perturbed(a, in_span, rng);
                CHECK(static_cast<bool>(is_derivation(a, off, k, TupleOrder::nondecreasing)) ==
                      static_cast<bool>(is_derivation(a, off, k, TupleOrder::ordered)));
                if (a.arity() >= 3)
                    CHECK(static_cast<bool>(is_double_derivation(a, off, k, TupleOrder::nondecreasing)) ==
                          static_cast<bool>(is_double_derivation(a, off, k, TupleOrder::ordered)));
            }
        }
    }
}

TEST_CASE("Leibniz rule holds on random vectors for a derivation")
{
    const ColorAlgebra a4 = build_simple_nlie(3);
    const HomMap d = rotation(1, 3);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vector> xs(3, zero_vector(4));
        for (auto& x : xs)
            for (auto& c : x)
                c = support::random_scalar(rng);
        Vector rhs = zero_vector(4);
        for (std::size_t i = 0; i < 3; ++i) {
            auto args = xs;
            args[i] = d.matrix * xs[i];
            axpy(rhs, Scalar(1), a4.bracket(args));
        }
        CHECK(d.matrix * a4.bracket(xs) == rhs);
    }
}
