#include <doctest.h>

#include <random>

#include "nhlc/errors.hpp"
#include "nhlc/grading.hpp"

using namespace nhlc;

TEST_CASE("group addition")
{
    GradingGroup z2 = GradingGroup::z2();
    CHECK(z2.add(z2.element({1}), z2.element({1})) == z2.zero());
    GradingGroup g(1, {2});
    CHECK(g.add(g.element({1, 1}), g.element({2, 1})) == g.element({3, 0}));
    CHECK(g.add(g.zero(), g.element({-4, 1})) == g.element({-4, 1}));
    CHECK_THROWS_AS(g.add(g.zero(), z2.zero()), ShapeError);
    CHECK(g.element({0, 3}) == g.element({0, 1}));
}

TEST_CASE("bicharacter evaluation")
{
    Bicharacter s = Bicharacter::super();
    const auto& z2 = s.group();
    CHECK(s(z2.element({1}), z2.element({1})) == -1);
    CHECK(s(z2.zero(), z2.element({1})) == 1);

    GradingGroup zz(2, {});
    Scalar q(3, 5);
    Bicharacter e(zz, {{1, q}, {1 / q, 1}});
    CHECK(e(zz.element({2, 0}), zz.element({0, 1})) == q * q);
    CHECK(validate_bicharacter(e).ok());
}

TEST_CASE("bicharacter validation")
{
    CHECK(validate_bicharacter(Bicharacter::super()).ok());
    auto bad = validate_bicharacter(Bicharacter(GradingGroup::z2(), {{2}}));
    CHECK_FALSE(bad.ok());
    bool torsion = false;
    for (const auto& v : bad.violations)
        torsion = torsion || v.check == "bicharacter.torsion_compatibility";
    CHECK(torsion);
    CHECK(validate_bicharacter(Bicharacter::trivial(GradingGroup(2, {3, 4}))).ok());
    CHECK_FALSE(validate_bicharacter(Bicharacter(GradingGroup(2, {}), {{1, 2}, {2, 1}})).ok());
    CHECK_THROWS_AS(Bicharacter(GradingGroup::z2(), {{0}}), ShapeError);
}

TEST_CASE("bicharacter properties on random elements")
{
    // Z^2 x Z/2 x Z/4 with a valid mixed table.
    GradingGroup g(2, {2, 4});
    Scalar q(2, 3);
    Bicharacter e(g, {{1, q, -1, 1}, {1 / q, -1, 1, -1}, {-1, 1, -1, -1}, {1, -1, -1, 1}});
    REQUIRE(validate_bicharacter(e).ok());
    std::mt19937 rng(3);
    auto random_element = [&] {
        std::vector<long long> c(4);
        for (auto& x : c)
            x = static_cast<long long>(rng() % 7) - 3;
        return g.element(c);
    };
    for (int i = 0; i < 100; ++i) {
        auto a = random_element(), a2 = random_element(), b = random_element();
        CHECK(e(a, b) * e(b, a) == 1);
        CHECK(e(g.add(a, a2), b) == e(a, b) * e(a2, b));
        CHECK(e(b, g.add(a, a2)) == e(b, a) * e(b, a2));
        Scalar self = e(a, a);
        CHECK((self == 1 || self == -1));
        auto coords = a.exponents();
        coords[2] += 2;
        coords[3] += 4;
        CHECK(e(g.element(coords), b) == e(a, b));
    }
}
