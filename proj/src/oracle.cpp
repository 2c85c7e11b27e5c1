#include "nhlc/oracle.hpp"

#include "nhlc/errors.hpp"

namespace nhlc {

namespace {

OracleVerdict fail(std::string witness)
{
    return {false, std::move(witness)};
}

/// Shape, block structure and commutation with alpha.
OracleVerdict check_map_basics(const ColorAlgebra& a, const HomMap& d)
{
    if (d.matrix.rows() != a.dim() || d.matrix.cols() != a.dim())
        throw ShapeError("map size differs from algebra dimension");
    a.group().check(d.degree);
    if (!respects_degree(a, d.matrix, d.degree))
        return fail("map is not homogeneous of degree " + format_degree(d.degree));
    if (!(d.matrix * a.alpha() == a.alpha() * d.matrix))
        return fail("map does not commute with alpha");
    return {};
}

std::vector<Vector> columns(const Matrix& m)
{
    std::vector<Vector> out(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        out[i] = m.column(i);
    return out;
}

std::vector<Tuple> tuples(std::size_t m, std::size_t len, TupleOrder order)
{
    return order == TupleOrder::ordered ? ordered_tuples(m, len) : nondecreasing_tuples(m, len);
}

}  // namespace

OracleVerdict is_derivation(const ColorAlgebra& a, const HomMap& d, int k, TupleOrder order)
{
    if (auto basics = check_map_basics(a, d); !basics)
        return basics;
    const std::size_t m = a.dim(), n = a.arity();
    const auto ak = columns(a.alpha_power(k));
    const auto dc = columns(d.matrix);
    std::vector<const Vector*> args(n);
    Vector rhs(m);
    for (const auto& t : tuples(m, n, order)) {
        Vector lhs = d.matrix * a.bracket_basis(t);
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        GroupElement prefix = a.group().zero();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                args[j] = j == i ? &dc[t[j]] : &ak[t[j]];
            a.bracket_accumulate(rhs, a.eps(d.degree, prefix), args);
            prefix = a.group().add(prefix, a.degree(t[i]));
        }
        if (lhs != rhs)
            return fail(format_tuple(a, t) + ": D[..] = " + format_vector(a, lhs) + ", Leibniz sum = " +
                        format_vector(a, rhs));
    }
    return {};
}

OracleVerdict is_double_derivation(const ColorAlgebra& a, const HomMap& d, int k, TupleOrder order)
{
    const std::size_t n = a.arity();
    if (n < 3)
        throw ArityError("double derivations need arity at least 3");
    if (auto basics = check_map_basics(a, d); !basics)
        return basics;
    const std::size_t m = a.dim();
    const auto ak = columns(a.alpha_power(k));
    const auto dc = columns(d.matrix);
    const auto unit = columns(Matrix::identity(m));
    const auto& g = a.group();
    const auto xs = tuples(m, n - 1, order);
    const auto ys = tuples(m, n, order);

    // Signs eps(d, prefix) depend only on degrees, so cache them per tuple.
    auto prefix_signs = [&](const Tuple& t, const GroupElement& start) {
        std::vector<Scalar> signs;
        GroupElement prefix = start;
        for (std::size_t i : t) {
            signs.push_back(a.eps(d.degree, prefix));
            prefix = g.add(prefix, a.degree(i));
        }
        return signs;
    };

    // Per y: [y], [alpha^k y] and sum_j eps(d, Y_j)[alpha^k y.., D y_j, ..]; the outer
    // prefix X contributes the factor eps(d, X) since eps is a bicharacter.
    struct YTerms {
        Vector bracket, bracket_ak, leibniz;
    };
    std::vector<YTerms> y_terms(ys.size());
    std::vector<const Vector*> args(n);
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        const Tuple& y = ys[yi];
        YTerms& terms = y_terms[yi];
        terms.bracket = a.bracket_basis(y);
        terms.bracket_ak = zero_vector(m);
        terms.leibniz = zero_vector(m);
        for (std::size_t j = 0; j < n; ++j)
            args[j] = &ak[y[j]];
        a.bracket_accumulate(terms.bracket_ak, Scalar(1), args);
        const auto signs = prefix_signs(y, g.zero());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                args[j] = j == i ? &dc[y[j]] : &ak[y[j]];
            a.bracket_accumulate(terms.leibniz, signs[i], args);
        }
    }

    Vector nested(m), lhs(m), rhs(m);
    for (const auto& x : xs) {
        const Scalar outer_sign = a.eps(d.degree, a.degree_sum(x));
        const auto x_signs = prefix_signs(x, g.zero());
        for (std::size_t yi = 0; yi < ys.size(); ++yi) {
            const YTerms& terms = y_terms[yi];
            for (std::size_t j = 0; j + 1 < n; ++j)
                args[j] = &unit[x[j]];
            args[n - 1] = &terms.bracket;
            std::fill(nested.begin(), nested.end(), Scalar(0));
            a.bracket_accumulate(nested, Scalar(1), args);
            lhs = d.matrix * nested;

            std::fill(rhs.begin(), rhs.end(), Scalar(0));
            args[n - 1] = &terms.bracket_ak;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                for (std::size_t j = 0; j + 1 < n; ++j)
                    args[j] = j == i ? &dc[x[j]] : &ak[x[j]];
                a.bracket_accumulate(rhs, x_signs[i], args);
            }
            for (std::size_t j = 0; j + 1 < n; ++j)
                args[j] = &ak[x[j]];
            args[n - 1] = &terms.leibniz;
            a.bracket_accumulate(rhs, outer_sign, args);
            if (lhs != rhs)
                return fail("x=" + format_tuple(a, x) + " y=" + format_tuple(a, ys[yi]) + ": D[..] = " +
                            format_vector(a, lhs) + ", Leibniz sum = " + format_vector(a, rhs));
        }
    }
    return {};
}

OracleVerdict is_triple_derivation(const ColorAlgebra& a, const HomMap& d, int k)
{
    if (a.arity() != 2)
        throw ArityError("triple derivations are defined for arity 2");
    if (auto basics = check_map_basics(a, d); !basics)
        return basics;
    const std::size_t m = a.dim();
    const Matrix ak = a.alpha_power(k);
    for (const auto& t : ordered_tuples(m, 3)) {
        const std::size_t x = t[0], y = t[1], z = t[2];
        Vector lhs = d.matrix * a.bracket({unit_vector(m, x), a.bracket_basis({y, z})});
        Vector rhs = a.bracket({d.matrix.column(x), a.bracket({ak.column(y), ak.column(z)})});
        axpy(rhs, a.eps(d.degree, a.degree(x)),
             a.bracket({ak.column(x), a.bracket({d.matrix.column(y), ak.column(z)})}));
        axpy(rhs, a.eps(d.degree, a.group().add(a.degree(x), a.degree(y))),
             a.bracket({ak.column(x), a.bracket({ak.column(y), d.matrix.column(z)})}));
        if (lhs != rhs)
            return fail(format_tuple(a, t) + ": D[x,[y,z]] = " + format_vector(a, lhs) + ", Leibniz sum = " +
                        format_vector(a, rhs));
    }
    return {};
}

}  // namespace nhlc
