#include "nhlc/builders.hpp"

#include "nhlc/errors.hpp"

namespace nhlc {

namespace {

std::vector<BasisElement> named_basis(const std::vector<GroupElement>& degrees, const std::string& prefix)
{
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        basis.push_back({prefix + std::to_string(i + 1), degrees[i]});
    return basis;
}

}  // namespace

ColorAlgebra build_abelian(std::size_t dim, const Bicharacter& eps, const std::vector<GroupElement>& degrees,
                           const Matrix& alpha, std::size_t arity, std::string name)
{
    if (degrees.size() != dim)
        throw ShapeError("one degree per basis element is required");
    ColorAlgebra a(std::move(name), arity, eps, named_basis(degrees, "e"), alpha, {});
    if (!respects_degree(a, alpha, a.group().zero()))
        throw InputError("alpha is not even for the given degrees");
    return a;
}

ColorAlgebra build_abelian_3()
{
    auto group = GradingGroup::trivial();
    return build_abelian(3, Bicharacter::trivial(group), std::vector<GroupElement>(3, group.zero()),
                         Matrix::identity(3), 3, "ABELIAN_3");
}

ColorAlgebra build_simple_nlie(std::size_t n)
{
    if (n < 2)
        throw ArityError("simple n-Lie algebra needs n >= 2");
    auto group = GradingGroup::trivial();
    const std::size_t m = n + 1;
    std::map<Tuple, Vector> constants;
    for (std::size_t i = 0; i < m; ++i) {
        Tuple t;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i)
                t.push_back(j);
        // 1-based position i+1 gives exponent n + i + 2.
        constants[t] = unit_vector(m, i);
        if ((n + i) % 2 == 1)
            constants[t][i] = -1;
    }
    std::string name = n == 3 ? "A4" : "SIMPLE_" + std::to_string(n);
    return ColorAlgebra(name, n, Bicharacter::trivial(group), named_basis(std::vector<GroupElement>(m, group.zero()), "e"),
                        Matrix::identity(m), std::move(constants));
}

ColorAlgebra build_yau_twist(const ColorAlgebra& a, const Matrix& phi, std::string name)
{
    const std::size_t m = a.dim();
    if (!(a.alpha() == Matrix::identity(m)))
        throw InputError("the twist needs an algebra with alpha = id");
    if (phi.rows() != m || phi.cols() != m)
        throw ShapeError("twist map has the wrong size");
    if (!respects_degree(a, phi, a.group().zero()))
        throw InputError("twist map is not even");
    std::vector<Vector> phi_col(m);
    for (std::size_t i = 0; i < m; ++i)
        phi_col[i] = phi.column(i);
    std::map<Tuple, Vector> constants;
    for (const auto& t : nondecreasing_tuples(m, a.arity())) {
        Vector value = a.bracket_basis(t);
        std::vector<Vector> args;
        for (std::size_t i : t)
            args.push_back(phi_col[i]);
        Vector image = phi * value;
        if (image != a.bracket(args))
            throw InputError("twist map is not a morphism: witness " + format_tuple(a, t));
        if (!is_zero(value))
            constants.emplace(t, std::move(image));
    }
    ColorAlgebra twisted(std::move(name), a.arity(), a.bicharacter(), a.basis(), phi, std::move(constants));
    auto report = validate_algebra(twisted);
    if (!report.ok())
        throw ValidationError("twisted algebra fails validation", report);
    return twisted;
}

ColorAlgebra build_super_heis()
{
    Bicharacter eps = Bicharacter::super();
    const auto& z2 = eps.group();
    std::vector<BasisElement> basis{{"x", z2.element({1})}, {"y", z2.element({1})}, {"z", z2.zero()}};
    std::map<Tuple, Vector> constants{{{0, 0}, {0, 0, 1}}, {{1, 1}, {0, 0, 1}}};
    return ColorAlgebra("SUPER_HEIS", 2, eps, basis, Matrix::identity(3), constants);
}

ColorAlgebra build_twisted_a4()
{
    return build_yau_twist(build_simple_nlie(3), Scalar(-1) * Matrix::identity(4), "TWISTED_A4");
}

ColorAlgebra build_regraded_a4()
{
    ColorAlgebra a4 = build_simple_nlie(3);
    auto z2 = GradingGroup::z2();
    std::vector<BasisElement> basis = a4.basis();
    for (std::size_t i = 0; i < 4; ++i)
        basis[i].degree = z2.element({i < 2 ? 0 : 1});
    return ColorAlgebra("A4_Z2", 3, Bicharacter::trivial(z2), basis, a4.alpha(), a4.constants());
}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names{"abelian", "a4", "simple-n", "twisted-a4", "super-heis", "a4-z2"};
    return names;
}

ColorAlgebra builtin_example(const std::string& name)
{
    if (name == "abelian")
        return build_abelian_3();
    if (name == "a4")
        return build_simple_nlie(3);
    if (name == "simple-n")
        return build_simple_nlie(4);
    if (name == "twisted-a4")
        return build_twisted_a4();
    if (name == "super-heis")
        return build_super_heis();
    if (name == "a4-z2")
        return build_regraded_a4();
    throw InputError("unknown example '" + name + "'");
}

}  // namespace nhlc
