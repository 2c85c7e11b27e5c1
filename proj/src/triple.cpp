#include "nhlc/triple.hpp"

#include "map_system.hpp"
#include "nhlc/errors.hpp"
#include "nhlc/parallel.hpp"

namespace nhlc {

using namespace detail;

GradedMapSpace triple_derivation_space(const ColorAlgebra& a2, int k)
{
    if (a2.arity() != 2)
        throw ArityError("triple derivations are defined for arity 2");
    const std::size_t m = a2.dim();
    const auto ak = columns_of(a2.alpha_power(k));
    const auto triples = ordered_tuples(m, 3);
    const auto& g = a2.group();
    auto space = space_by_degree(SpaceKind::tder, a2, k, [&](const GroupElement& d) {
        Unknowns u(a2, d);
        if (u.count() == 0)
            return std::vector<HomMap>{};
        std::vector<Equations> blocks(triples.size());
        parallel_for(triples.size(), [&](std::size_t ti) {
            const std::size_t x = triples[ti][0], y = triples[ti][1], z = triples[ti][2];
            Equations e(m, u.count());
            add_map_applied(e, u, a2.bracket({unit_vector(m, x), a2.bracket_basis({y, z})}), Scalar(1));
            const Vector yz = a2.bracket({ak[y], ak[z]});
            add_slot_term(e, u, x, Scalar(-1), [&](std::size_t j) { return a2.bracket({unit_vector(m, j), yz}); });
            add_slot_term(e, u, y, -a2.eps(d, a2.degree(x)), [&](std::size_t j) {
                return a2.bracket({ak[x], a2.bracket({unit_vector(m, j), ak[z]})});
            });
            add_slot_term(e, u, z, -a2.eps(d, g.add(a2.degree(x), a2.degree(y))), [&](std::size_t j) {
                return a2.bracket({ak[x], a2.bracket({ak[y], unit_vector(m, j)})});
            });
            blocks[ti] = std::move(e);
        });
        return solve_maps(u, d, commutation_equations(u, a2.alpha()), std::move(blocks));
    });
    return space;
}

ValidationReport verify_tder_invariance(const ColorAlgebra& a, int k_max)
{
    if (!is_perfect(a))
        throw HypothesisError("algebra is not perfect");
    if (center(a).dim() != 0)
        throw HypothesisError("algebra has a nonzero center");
    const auto inner = collect_spaces(SpaceKind::inner, a, 0, k_max);
    if (inner.dim() == 0)
        throw HypothesisError("inner derivations vanish (no alpha-fixed arguments)");

    const MapAlgebra dder = maps_as_color_algebra(collect_spaces(SpaceKind::dder, a, 0, k_max), a, "DDER");
    const std::size_t m2 = dder.algebra.dim();
    ValidationReport report;

    // Inn as a subspace of the double-derivation algebra.
    std::vector<Vector> inn_coords;
    for (const auto& block : inner.blocks)
        for (const auto& map : block.basis) {
            auto c = dder.coordinates(map);
            if (!c) {
                report.add("tder_invariance.inn_in_dder", "inner map of degree " + format_degree(map.degree),
                           "inside double derivations", "outside span");
                continue;
            }
            inn_coords.push_back(*c);
        }
    const Subspace inn = Subspace::span(m2, inn_coords);

    for (int k = 0; k <= k_max; ++k) {
        const auto tder = triple_derivation_space(dder.algebra, k).maps_at(k);
        for (std::size_t i = 0; i < tder.size(); ++i)
            for (const auto& v : inn.basis())
                if (!inn.contains(tder[i].matrix * v))
                    report.add("tder_invariance.keeps_inn",
                               "T[k=" + std::to_string(k) + ",#" + std::to_string(i) + "]", "T(Inn) in Inn",
                               "image leaves Inn");
        // Combinations of the triple derivations vanishing on Inn.
        std::vector<Vector> columns;
        for (const auto& t : tder) {
            Vector stacked;
            for (const auto& v : inn.basis()) {
                Vector image = t.matrix * v;
                stacked.insert(stacked.end(), image.begin(), image.end());
            }
            columns.push_back(std::move(stacked));
        }
        if (!tder.empty()) {
            const auto kernel = nullspace(Matrix::from_columns(columns, m2 * inn.dim()));
            if (!kernel.empty())
                report.add("tder_invariance.vanishing_on_inn_is_zero", "k=" + std::to_string(k), "0",
                           std::to_string(kernel.size()) + "-dimensional space of maps vanishing on Inn");
        }
    }
    return report;
}

TderComparison verify_tder_equals_der(const ColorAlgebra& a2, int k_max, bool in_hypothesis)
{
    if (a2.arity() != 2)
        throw ArityError("triple derivations are defined for arity 2");
    TderComparison out;
    out.in_hypothesis = in_hypothesis;
    for (int k = 0; k <= k_max; ++k) {
        const Subspace der = derivation_space(a2, k).span_at(k);
        const Subspace tder = triple_derivation_space(a2, k).span_at(k);
        TderDimensionRow row{k, der.dim(), tder.dim(), tder.contains(der), der == tder};
        out.rows.push_back(row);
        const std::string where = a2.name() + " k=" + std::to_string(k);
        if (!row.der_contained)
            out.report.add("tder.der_contained", where, "Der in TDer", "derivation outside TDer");
        else if (!row.equal) {
            const std::string detail = "dim Der = " + std::to_string(row.der_dim) +
                                       " < dim TDer = " + std::to_string(row.tder_dim);
            if (in_hypothesis)
                out.report.add("tder.equals_der", where, "TDer = Der", detail);
            else
                out.notices.push_back(where + ": strict containment (" + detail + "), out of hypothesis");
        }
    }
    return out;
}

}  // namespace nhlc
